"""Command line driver: ``hh verify-resolution | dims | ring | oracle | translates``.

Every command builds a report (a list of rows plus a summary), writes it as
JSON, CSV or text, and exits with status 0 exactly when no row failed.
Reports are pure functions of the parsed configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import random
import sys
from dataclasses import asdict, dataclass

from .bar import DEFAULT_LIMIT, DEFAULT_T_MAX, BarComplex, OracleResourceError
from .demo import dual_numbers, dual_numbers_resolution
from .field import FieldError, FieldSpec, _is_prime
from .pathalg import Algebra, QuiverError, load_quiver
from .parallel import pmap

log = logging.getLogger("hhe6")

MAX_S = 8
RING_MAX_S = 2
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    s: int = 1
    char: int = 0
    max_degree: int | None = None
    fmt: str = "json"
    output: str | None = None
    verbosity: int = 0
    seed: int = 0
    inject_typo: int | None = None
    demo: str | None = None
    quiver: str | None = None
    nilpotency: int | None = None
    t_max: int = DEFAULT_T_MAX
    sample: int | None = None

    def validate(self) -> "RunConfig":
        if not 1 <= self.s <= MAX_S:
            raise ConfigError(f"s must lie in 1..{MAX_S}, got {self.s}")
        if self.char != 0 and not _is_prime(self.char):
            raise ConfigError(f"characteristic must be 0 or a prime, got {self.char}")
        if self.max_degree is not None and self.max_degree < 0:
            raise ConfigError("max degree must be non-negative")
        if self.fmt not in ("json", "csv", "text"):
            raise ConfigError(f"unknown format {self.fmt}")
        if self.inject_typo is not None and not 0 <= self.inject_typo <= 10:
            raise ConfigError("--inject-typo takes d0 .. d10")
        if self.t_max < 0:
            raise ConfigError("--t-max must be non-negative")
        if self.sample is not None and self.sample < 1:
            raise ConfigError("--sample must be positive")
        return self

    def echo(self) -> dict:
        """The fields that determine the report (the output path does not)."""
        d = asdict(self)
        d.pop("output")
        d.pop("verbosity")
        return d


@dataclass
class Report:
    command: str
    config: dict
    rows: list[dict]
    extra: dict | None = None
    text: str | None = None

    @property
    def failures(self) -> int:
        return sum(1 for r in self.rows if r.get("ok") is False)

    def to_json(self) -> str:
        data = {"command": self.command, "config": self.config, "rows": self.rows,
                "summary": {"rows": len(self.rows), "failures": self.failures}}
        if self.extra:
            data.update(self.extra)
        return json.dumps(data, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        keys: list[str] = []
        for r in self.rows:
            keys += [k for k in r if k not in keys]
        w = csv.writer(buf)
        w.writerow(keys)
        for r in self.rows:
            w.writerow([_csv_cell(r.get(k)) for k in keys])
        return buf.getvalue()

    def to_text(self) -> str:
        if self.text is not None:
            return self.text
        return _plain_table(self.rows) + f"\n{len(self.rows)} rows, {self.failures} failures\n"


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _plain_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    keys: list[str] = []
    for r in rows:
        keys += [k for k in r if k not in keys]
    cells = [[_csv_cell(r.get(k)) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    line = "  ".join(k.ljust(w) for k, w in zip(keys, widths))
    body = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join([line.rstrip(), *body])


# ---------------------------------------------------------------------------
# commands


def cmd_verify_resolution(cfg: RunConfig) -> Report:
    from .e6.resolution import Mutation
    from .e6.verify import verify_resolution

    top = 11 if cfg.max_degree is None else cfg.max_degree
    mutation = Mutation(cfg.inject_typo) if cfg.inject_typo is not None else None
    rows = [r.to_json() for r in verify_resolution(cfg.s, cfg.char, top, mutation)]
    return Report(cfg.command, cfg.echo(), rows)


def cmd_dims(cfg: RunConfig) -> Report:
    from .e6.dims import classify_degree, compare_dims, congruence
    from .e6.resolution import e6_resolution

    res = e6_resolution(cfg.s, cfg.char)
    top = 2 * res.period - 1 if cfg.max_degree is None else cfg.max_degree
    dim_rows = pmap(lambda t: compare_dims(res, [t])[0], range(top + 1))
    rows = []
    for d in dim_rows:
        c = classify_degree(cfg.s, cfg.char, d.t)
        e = d.expected
        rows.append({"t": d.t, "ell": c.ell, "r": c.r, "congruence": congruence(cfg.s, d.t),
                     "hom": d.hom, "hom_expected": e.hom, "im": d.im, "im_expected": e.im,
                     "hh": d.hh, "hh_expected": e.hh, "ok": d.ok})
    return Report(cfg.command, cfg.echo(), rows, text=_dims_grid(rows, cfg.s))


def _dims_grid(rows: list[dict], s: int) -> str:
    """HH dimensions laid out as residues r (rows) against congruence classes (columns).

    A cell lists ``t:dim`` for every degree with that residue and class.
    """
    cells: dict[tuple[int, int], list[str]] = {}
    for row in rows:
        mark = "" if row["ok"] else f"!{row['hh_expected']}"
        cells.setdefault((row["r"], row["congruence"]), []).append(f"{row['t']}:{row['hh']}{mark}")
    head = ["r"] + [f"c={c}" for c in range(2 * s)]
    grid = [[str(r)] + [" ".join(cells.get((r, c), ["."])) for c in range(2 * s)] for r in range(11)]
    widths = [max(len(head[i]), *(len(g[i]) for g in grid)) for i in range(len(head))]
    out = ["  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip()]
    out += ["  ".join(c.ljust(w) for c, w in zip(g, widths)).rstrip() for g in grid]
    bad = sum(1 for r in rows if not r["ok"])
    out.append("")
    out.append("cells: t:dim HH^t for t = 11 ell + r in class c; '!n' marks a mismatch with expected n")
    out.append(f"{len(rows)} degrees, {bad} mismatches")
    return "\n".join(out) + "\n"


def cmd_ring(cfg: RunConfig) -> Report:
    from .e6.resolution import e6_resolution
    from .e6.ring import RingContext, verify_factorization_lemma, verify_generation, verify_worked_example

    if cfg.s > RING_MAX_S:
        raise OracleResourceError(f"ring verification is limited to s <= {RING_MAX_S}")
    ctx = RingContext(e6_resolution(cfg.s, cfg.char))
    f = ctx.field
    checks = ctx.verify_relations()
    if cfg.sample is not None and cfg.sample < len(checks):
        picked = sorted(random.Random(cfg.seed).sample(range(len(checks)), cfg.sample))
        checks = [checks[k] for k in picked]
    rows = []
    for c in checks:
        j = c.to_json(f)
        rows.append({"relation": j["relation"], "lhs": f"Y{c.a[0]}_{c.a[1]}*Y{c.b[0]}_{c.b[1]}",
                     "degree": j["degree"], "expected": _rhs_text(j["expected"]),
                     "computed_class": j["computed_class"], "expected_class": j["expected_class"],
                     "ok": j["pass"], "pass_up_to_unit": j["pass_up_to_unit"]})
    gen = verify_generation(ctx)
    fac = verify_factorization_lemma(ctx)
    work = verify_worked_example(ctx)
    rows.append({"relation": "generation", "lhs": "", "degree": None, "expected": "span HH^t for t < M",
                 "computed_class": None, "expected_class": None, "ok": gen.ok, "pass_up_to_unit": gen.ok})
    for w in fac:
        lhs = "" if w.factors is None else f"Y{w.factors[0][0]}_{w.factors[0][1]}*Y{w.factors[1][0]}_{w.factors[1][1]}"
        rows.append({"relation": "factorization", "lhs": lhs, "degree": w.target[1],
                     "expected": f"Y{w.target[0]}_{w.target[1]}", "computed_class": None,
                     "expected_class": None, "ok": w.exact, "pass_up_to_unit": w.up_to_unit})
    for w in work:
        rows.append({"relation": "worked-example", "lhs": f"Y4_{w.t4}*Y3_{w.t3}", "degree": w.t4 + w.t3,
                     "expected": "Y5", "computed_class": None, "expected_class": None,
                     "ok": w.exact, "pass_up_to_unit": w.up_to_unit})
    extra = {"generation": {"ok": gen.ok, "degrees": gen.degrees, "failures": gen.failures},
             "generators": [list(g) for g in ctx.generators()]}
    return Report(cfg.command, cfg.echo(), rows, extra)


def _rhs_text(e: dict | None) -> str:
    if e is None:
        return "0"
    coef, sp = e["coef"], e["s_power"]
    scale = f"{coef}" + (f"*s^{sp}" if sp else "")
    return f"{scale}*X{e['family']}"


def cmd_oracle(cfg: RunConfig) -> Report:
    field = FieldSpec.of_characteristic(cfg.char)
    if cfg.demo is not None:
        if cfg.demo != "dual-numbers":
            raise ConfigError(f"unknown demo {cfg.demo}")
        alg, res = dual_numbers(cfg.char), dual_numbers_resolution(cfg.char)
    elif cfg.quiver is not None:
        if cfg.nilpotency is None:
            raise ConfigError("--quiver needs --nilpotency")
        quiver, rels = load_quiver(cfg.quiver)
        alg, res = Algebra(quiver, field, rels, cfg.nilpotency), None
    else:
        from .e6.quiver import e6_algebra
        from .e6.resolution import e6_resolution

        alg, res = e6_algebra(cfg.s, cfg.char), e6_resolution(cfg.s, cfg.char)
    bar = BarComplex(alg, cfg.t_max, DEFAULT_LIMIT)
    rows = []
    for t in range(cfg.t_max + 1):
        o = bar.hh_dim(t)
        r = res.hh_dim(t) if res is not None else None
        rows.append({"t": t, "oracle": o, "resolution": r, "ok": None if r is None else o == r})
    centre = alg.center_dim()
    rows.append({"t": "centre", "oracle": centre, "resolution": rows[0]["oracle"], "ok": centre == rows[0]["oracle"]})
    return Report(cfg.command, cfg.echo(), rows)


def cmd_translates(cfg: RunConfig) -> Report:
    from .e6.generators import admissible_degrees
    from .e6.resolution import e6_resolution
    from .e6.translates import FIXTURE_FAMILIES, translate_fixture_check

    res = e6_resolution(cfg.s, cfg.char)
    jobs = [(i, t) for i in FIXTURE_FAMILIES for t in admissible_degrees(i, cfg.s, cfg.char, res.period)]
    reps = pmap(lambda job: translate_fixture_check(res, *job), jobs)
    rows = [{"family": r.family, "t": r.t, "checks": r.checked, "ok": r.ok, "detail": "; ".join(r.failures[:3])}
            for r in reps]
    return Report(cfg.command, cfg.echo(), rows)


COMMANDS = {
    "verify-resolution": cmd_verify_resolution,
    "dims": cmd_dims,
    "ring": cmd_ring,
    "oracle": cmd_oracle,
    "translates": cmd_translates,
}


# ---------------------------------------------------------------------------
# argument parsing


def _typo(value: str) -> int:
    v = value[1:] if value.startswith("d") else value
    try:
        return int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected d0 .. d10, got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=int, default=1, help="parameter s of the algebra (1..8)")
    common.add_argument("--char", type=int, default=0, help="characteristic: 0 or a prime")
    common.add_argument("--max-degree", type=int, default=None, help="highest degree to check")
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")
    common.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized subsets")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="hh", description="Hochschild cohomology verification driver.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify-resolution", parents=[common], help="check the bimodule resolution")
    v.add_argument("--inject-typo", type=_typo, default=None, metavar="dK",
                   help="drop one entry of d_K to show that the validators notice")
    sub.add_parser("dims", parents=[common], help="computed against expected dimensions")
    r = sub.add_parser("ring", parents=[common], help="generators and ring relations")
    r.add_argument("--sample", type=int, default=None, help="check a seeded random subset of products")
    o = sub.add_parser("oracle", parents=[common], help="bar-complex oracle against the resolution")
    o.add_argument("--demo", default=None, help="'dual-numbers'")
    o.add_argument("--quiver", default=None, help="JSON quiver file (oracle column only)")
    o.add_argument("--nilpotency", type=int, default=None, help="paths of this length vanish (with --quiver)")
    o.add_argument("--t-max", type=int, default=DEFAULT_T_MAX)
    sub.add_parser("translates", parents=[common], help="stored translate tables as chain maps")
    return p


def parse_config(argv: list[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command, s=ns.s, char=ns.char, max_degree=ns.max_degree, fmt=ns.fmt, output=ns.output,
        verbosity=ns.verbose, seed=ns.seed, inject_typo=getattr(ns, "inject_typo", None),
        demo=getattr(ns, "demo", None), quiver=getattr(ns, "quiver", None),
        nilpotency=getattr(ns, "nilpotency", None), t_max=getattr(ns, "t_max", DEFAULT_T_MAX),
        sample=getattr(ns, "sample", None),
    ).validate()


def render(report: Report, fmt: str) -> str:
    return {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[fmt]()


def run(cfg: RunConfig) -> tuple[int, str]:
    report = COMMANDS[cfg.command](cfg)
    return (EXIT_OK if report.failures == 0 else EXIT_FAIL), render(report, cfg.fmt)


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except ConfigError as exc:
        print(f"hh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2), stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    log.info("running %s", cfg.command)
    try:
        code, text = run(cfg)
    except OracleResourceError as exc:
        print(f"hh: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ConfigError, QuiverError, FieldError, OSError) as exc:
        print(f"hh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    log.info("exit status %d", code)
    return code


if __name__ == "__main__":
    sys.exit(main())
