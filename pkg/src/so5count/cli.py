"""Command-line front end.

    so5count rho 10 --algebra so5
    so5count sum 1000000 --method hyperbola
    so5count scan --from 1000000 --to 1000000000000 --points 25 --out scan.csv
    so5count verify --level quick

Exit status: 0 ok, 1 usage error, 2 computational error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, fields
from enum import Enum
from pathlib import Path

from . import asymptotics as asy
from . import counting as cnt
from . import wittenzeta as wz
from .errors import DomainError, So5CountError
from .specfun import constants

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY = 0, 1, 2, 3

CSV_HEADER = ("x", "S_exact", "main_term", "second_paper", "second_component",
              "resid_paper", "resid_component", "resid_norm")
_ROW_FIELDS = tuple(f.name for f in fields(asy.SummatoryRow))


class Spacing(str, Enum):
    GEOMETRIC = "geometric"
    LINEAR = "linear"


class Format(str, Enum):
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class ScanConfig:
    algebra: cnt.Algebra
    x_lo: int
    x_hi: int
    points: int
    spacing: Spacing = Spacing.GEOMETRIC
    out_path: str = "-"
    format: Format = Format.CSV

    def __post_init__(self):
        object.__setattr__(self, "algebra", cnt.Algebra(self.algebra))
        object.__setattr__(self, "spacing", Spacing(self.spacing))
        object.__setattr__(self, "format", Format(self.format))
        if not 1 <= self.x_lo <= self.x_hi:
            raise DomainError(f"need 1 <= x_lo <= x_hi, got {self.x_lo}, {self.x_hi}")
        if self.points < 1:
            raise DomainError(f"points must be >= 1, got {self.points}")

    def grid(self) -> list[int]:
        make = asy.geometric_grid if self.spacing is Spacing.GEOMETRIC else asy.linear_grid
        return make(self.x_lo, self.x_hi, self.points)


def _fmt(v) -> str:
    return str(v) if isinstance(v, int) else format(v, ".10g")


def render_rows(rows, fmt: Format = Format.CSV) -> str:
    """Rows as CSV (fixed header) or a JSON list with the same keys."""
    if Format(fmt) is Format.JSON:
        objs = [{h: (getattr(r, f) if isinstance(getattr(r, f), int) else float(_fmt(getattr(r, f))))
                 for h, f in zip(CSV_HEADER, _ROW_FIELDS)} for r in rows]
        return json.dumps(objs, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(_fmt(getattr(r, f)) for f in _ROW_FIELDS)
    return buf.getvalue()


def read_scan_csv(path) -> list[asy.SummatoryRow]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != CSV_HEADER:
            raise ValueError(f"unexpected header {header}")
        return [asy.SummatoryRow(int(r[0]), int(r[1]), *map(float, r[2:])) for r in reader]


def emit_scan(cfg: ScanConfig, workers: int | None = None) -> str:
    """Compute the scan and write it to ``cfg.out_path`` ("-" is stdout); returns the text."""
    rows = asy.residual_scan(cfg.grid(), workers=workers, algebra=cfg.algebra)
    text = render_rows(rows, cfg.format)
    if cfg.out_path == "-":
        sys.stdout.write(text)
    else:
        Path(cfg.out_path).write_text(text)
    return text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_help(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="so5count", description="Representation counting for so(5) and su(3).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    algebras = [a.value for a in cnt.Algebra]

    q = sub.add_parser("rho", help="number of representations of dimension exactly n")
    q.add_argument("n", type=int)
    q.add_argument("--algebra", choices=algebras, default="so5")

    q = sub.add_parser("sum", help="number of representations of dimension <= x")
    q.add_argument("x", type=int)
    q.add_argument("--method", choices=[m.value for m in cnt.Method], default="hyperbola")
    q.add_argument("--algebra", choices=algebras, default="so5")

    q = sub.add_parser("scan", help="exact counts against the asymptotic model on a grid")
    q.add_argument("--algebra", choices=algebras, default="so5")
    q.add_argument("--from", dest="x_lo", type=int, required=True)
    q.add_argument("--to", dest="x_hi", type=int, required=True)
    q.add_argument("--points", type=int, default=16)
    q.add_argument("--spacing", choices=[s.value for s in Spacing], default="geometric")
    q.add_argument("--out", default="-")
    q.add_argument("--format", choices=[f.value for f in Format], default="csv")

    q = sub.add_parser("constants", help="constants table and asymptotic coefficients")
    q.add_argument("--json", action="store_true")

    q = sub.add_parser("residues", help="poles and residues of the so(5) Witten zeta function")
    q.add_argument("--d-min", type=int, required=True)
    q.add_argument("--d-max", type=int, required=True)

    q = sub.add_parser("zeta-partial", help="box-truncated Witten zeta sum")
    q.add_argument("--s", type=float, required=True)
    q.add_argument("--n-max", type=int, required=True)

    q = sub.add_parser("fit", help="least-squares x^(1/3) coefficient from exact counts")
    q.add_argument("--from", dest="x_lo", type=int, required=True)
    q.add_argument("--to", dest="x_hi", type=int, required=True)
    q.add_argument("--points", type=int, default=16)

    q = sub.add_parser("verify", help="run the verification suite")
    q.add_argument("--level", choices=["quick", "full"], default="quick")
    return p


def _constants_table() -> dict:
    table = {k: float(v) for k, v in constants().items()}
    co = asy.coefficients()
    lead, second = asy.su3_coefficients()
    table.update(c_half=co.c_half, k_paper=co.k_paper, k_component=co.k_component,
                 residue_half=wz.residue_at_half(), c_su3=lead, su3_second=second)
    return table


def _dispatch(args) -> tuple[int, str]:
    cmd = args.command
    if cmd == "rho":
        return EXIT_OK, f"{cnt.rho(cnt.Algebra(args.algebra), args.n)}\n"
    if cmd == "sum":
        return EXIT_OK, f"{cnt.count(args.x, args.algebra, args.method)}\n"
    if cmd == "scan":
        cfg = ScanConfig(args.algebra, args.x_lo, args.x_hi, args.points, args.spacing, args.out, args.format)
        emit_scan(cfg)
        return EXIT_OK, ""
    if cmd == "constants":
        table = _constants_table()
        if args.json:
            return EXIT_OK, json.dumps(table, indent=1) + "\n"
        width = max(map(len, table))
        return EXIT_OK, "".join(f"{k:<{width}}  {v:.16g}\n" for k, v in table.items())
    if cmd == "residues":
        out = [{"location": str(p.location), "location_value": float(p.location),
                "d_index": p.d_index, "residue": p.residue} for p in wz.poles(args.d_min, args.d_max)]
        return EXIT_OK, json.dumps(out, indent=1) + "\n"
    if cmd == "zeta-partial":
        r = wz.zeta_so5_partial(args.s, args.n_max)
        return EXIT_OK, json.dumps(asdict(r)) + "\n"
    if cmd == "fit":
        e2 = asy.fit_second_coefficient(args.x_lo, args.x_hi, args.points)
        co = asy.coefficients()
        return EXIT_OK, json.dumps({"E2": e2, "k_paper": co.k_paper, "k_component": co.k_component,
                                    "distance_paper": abs(e2 - co.k_paper),
                                    "distance_component": abs(e2 - co.k_component)}, indent=1) + "\n"
    if cmd == "verify":
        from .verify import run_checks

        results = run_checks(args.level, emit=lambda r: print(r.line(), flush=True))
        failed = [r.name for r in results if r.failed]
        if failed:
            print(f"verification failed: {', '.join(failed)}")
            return EXIT_VERIFY, ""
        print(f"all {sum(r.status == 'PASS' for r in results)} checks passed")
        return EXIT_OK, ""
    raise AssertionError(cmd)


def _describe(args) -> str:
    inputs = {k: v for k, v in vars(args).items() if k != "command"}
    return f"{args.command}({', '.join(f'{k}={v!r}' for k, v in inputs.items())})"


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        status, text = _dispatch(args)
    except (So5CountError, OverflowError, ArithmeticError, ValueError) as exc:
        print(f"error in {_describe(args)}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print(f"error in {_describe(args)}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
