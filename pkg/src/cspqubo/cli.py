"""Command line entry point: ``cspqubo run`` and ``cspqubo advise``."""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import advisor
from .analysis import decode, occurrence_report
from .builder import HamiltonianKind, PenaltyParams, build_hamiltonian
from .core import CspError, CspInstance, EmptySet, LengthMismatch, validate_instance
from .sampler import TooManyVariables, sample_sa, solve_decomposed, solve_exhaustive


@dataclass
class RunConfig:
    input: Path
    hamiltonian: str = "standard"
    A: float | None = None
    B: float = 1.0
    num_reads: int = 100
    solver: str = "sa"
    seed: int = 0
    lambda_source: str = "exact"
    output: str = "table"
    window: int | None = None
    chain_case: int | None = None

    def __post_init__(self):
        if self.num_reads < 1:
            raise ValueError("num_reads must be at least 1")
        if self.window is not None and self.window < 1:
            raise ValueError("window must be at least 1")


def ingest(path: str | Path) -> CspInstance:
    """One string per line; blank lines and ``#`` comments are skipped."""
    text = Path(path).read_text(encoding="utf-8")
    rows: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s and not s.startswith("#"):
            rows.append((lineno, s))
    if not rows:
        raise EmptySet(f"{path}: no strings found")
    m = len(rows[0][1])
    for lineno, s in rows:
        if len(s) != m:
            raise LengthMismatch(f"{path}: line {lineno} has length {len(s)}, expected {m}")
    return validate_instance(s for _, s in rows)


def split_windows(instance: CspInstance, width: int) -> list[CspInstance]:
    """Cut every string into consecutive substrings of ``width`` symbols."""
    return [
        validate_instance(s[start:start + width] for s in instance.strings)
        for start in range(0, instance.m, width)
    ]


def choose_A(instance: CspInstance, B: float) -> float:
    if instance.n < 2:
        return float(math.ceil(B) + 1)
    return advisor.default_A(instance, B)


def _solve(instance: CspInstance, params: PenaltyParams, kind: HamiltonianKind, cfg: RunConfig) -> dict:
    if cfg.solver == "sa":
        model = build_hamiltonian(instance, params, kind)
        samples = sample_sa(model, cfg.num_reads, seed=cfg.seed)
        report = occurrence_report(samples, instance)
        best = next(
            (r for r in samples.records if decode(r.assignment, instance).valid), None
        )
        return {
            "results": [
                {"string": p, "N": report.counts[p], "OR": report.ratios[p]}
                for p in sorted(report.counts, key=lambda p: (-report.counts[p], p))
            ],
            "MOR": report.mor,
            "invalid_count": report.invalid_count,
            "min_energy": samples.first.energy,
            "P": decode(best.assignment, instance).string if best else None,
        }

    if cfg.solver == "exact":
        sol = solve_exhaustive(build_hamiltonian(instance, params, kind))
        decoded = [decode(a, instance) for a in sol.optima]
        counts: dict[str, int] = {}
        for d in decoded:
            if d.valid:
                counts[d.string] = counts.get(d.string, 0) + 1
        total = len(sol.optima)
        return {
            "results": [
                {"string": p, "N": c, "OR": c / total} for p, c in sorted(counts.items())
            ],
            "MOR": max(counts.values(), default=0) / total,
            "invalid_count": total - sum(counts.values()),
            "min_energy": sol.energy,
            "P": min(counts) if counts else None,
        }

    if cfg.solver == "decomposed":
        sol = solve_decomposed(instance, params, kind)
        d = decode(sol.assignment, instance)
        return {
            "results": [{"string": d.string, "N": 1, "OR": 1.0}] if d.valid else [],
            "MOR": 1.0 if d.valid else 0.0,
            "invalid_count": 0 if d.valid else 1,
            "min_energy": sol.energy,
            "P": d.string,
        }
    raise ValueError(f"unknown solver {cfg.solver!r}")


def run(cfg: RunConfig) -> dict:
    instance = ingest(cfg.input)
    if cfg.window is not None and cfg.window > instance.m:
        raise ValueError(f"window {cfg.window} exceeds string length {instance.m}")
    A = cfg.A if cfg.A is not None else choose_A(instance, cfg.B)
    params = PenaltyParams(A, cfg.B)
    kind = HamiltonianKind.parse(cfg.hamiltonian)
    m_max = cfg.window or 1
    report = advisor.advise(instance, cfg.B, cfg.lambda_source, m_max=m_max, case=cfg.chain_case)

    out = {
        "set": Path(cfg.input).stem,
        "instance": {"n": instance.n, "m": instance.m},
        "advisor": report.to_dict(),
        "solver": cfg.solver,
        "hamiltonian": cfg.hamiltonian,
        "params": {"A": A, "B": cfg.B, "num_reads": cfg.num_reads, "seed": cfg.seed},
    }
    if cfg.window is None:
        out.update(_solve(instance, params, kind, cfg))
        return out

    windows = [_solve(sub, params, kind, cfg) for sub in split_windows(instance, cfg.window)]
    parts = [w["P"] for w in windows]
    out.update(
        results=[],
        MOR=None,
        invalid_count=sum(w["invalid_count"] for w in windows),
        min_energy=sum(w["min_energy"] for w in windows),
        P="".join(parts) if all(p is not None for p in parts) else None,
        windows=windows,
    )
    return out


def format_table(out: dict) -> str:
    """Fixed-width rendering with the columns Set, P, A, B, gamma, OR_P, MOR."""
    P = out["P"]
    or_p = next((r["OR"] for r in out["results"] if r["string"] == P), None)
    header = f"{'Set':<12}{'P':<16}{'A':>8}{'B':>8}{'gamma*':>8}{'OR_P':>10}{'MOR':>10}"
    row = (
        f"{out['set']:<12}{repr(P) if P else '-':<16}{out['params']['A']!s:>8}"
        f"{out['params']['B']!s:>8}{out['advisor']['gamma_suggested']!s:>8}"
        f"{or_p if or_p is not None else '-'!s:>10}{out['MOR'] if out['MOR'] is not None else '-'!s:>10}"
    )
    adv = out["advisor"]
    lines = [
        header,
        row,
        "",
        f"solver={out['solver']} hamiltonian={out['hamiltonian']} "
        f"n={out['instance']['n']} m={out['instance']['m']} "
        f"num_reads={out['params']['num_reads']} seed={out['params']['seed']}",
        f"min_energy={out['min_energy']!s} invalid_count={out['invalid_count']}",
        f"A range ({adv['lambda_source']} lambda): ({adv['A_range'][0]!s}, {adv['A_range'][1]}]"
        f"  paper upper={adv['A_upper_paper']} exact upper={adv['A_upper_exact']}",
        f"chain case={adv['chain_case']} (* gamma is advisory; classical solvers ignore it)",
    ]
    if out["results"]:
        lines.append("")
        lines.append(f"{'string':<16}{'N':>6}{'OR':>10}")
        lines += [f"{r['string']:<16}{r['N']:>6}{r['OR']!s:>10}" for r in out["results"]]
    for k, w in enumerate(out.get("windows", []), start=1):
        lines.append(f"window {k}: P={w['P']!r} min_energy={w['min_energy']!s} MOR={w['MOR']!s}")
    return "\n".join(lines)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cspqubo", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="build a Hamiltonian and solve it")
    r.add_argument("input", type=Path)
    r.add_argument("--hamiltonian", choices=["standard", "numeric"], default="standard")
    r.add_argument("-A", "--A", dest="A", type=float, default=None)
    r.add_argument("-B", "--B", dest="B", type=float, default=1.0)
    r.add_argument("--num-reads", type=int, default=100)
    r.add_argument("--solver", choices=["sa", "exact", "decomposed"], default="sa")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--lambda-source", choices=["paper", "exact"], default="exact")
    r.add_argument("--output", choices=["table", "json"], default="table")
    r.add_argument("--window", type=int, default=None)
    r.add_argument("--chain-case", type=int, choices=[1, 2, 3, 4], default=None)

    a = sub.add_parser("advise", help="print penalty and chain-strength advice")
    a.add_argument("input", type=Path)
    a.add_argument("-B", "--B", dest="B", type=float, default=1.0)
    a.add_argument("--lambda-source", choices=["paper", "exact"], default="exact")
    a.add_argument("--m-max", type=int, default=1)
    a.add_argument("--chain-case", type=int, choices=[1, 2, 3, 4], default=None)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "advise":
            inst = ingest(args.input)
            rep = advisor.advise(inst, args.B, args.lambda_source, args.m_max, args.chain_case)
            print(json.dumps(rep.to_dict(), indent=2))
            return 0
        cfg = RunConfig(
            input=args.input,
            hamiltonian=args.hamiltonian,
            A=args.A,
            B=args.B,
            num_reads=args.num_reads,
            solver=args.solver,
            seed=args.seed,
            lambda_source=args.lambda_source,
            output=args.output,
            window=args.window,
            chain_case=args.chain_case,
        )
        out = run(cfg)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TooManyVariables as exc:
        print(f"error: {exc}; try --solver decomposed or --window", file=sys.stderr)
        return 2
    except (CspError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(out, indent=2) if cfg.output == "json" else format_table(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
