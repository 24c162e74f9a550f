"""Command-line front end.

Exit codes: 0 = expected outcome (identity verified; for `refute`, residual
found nonzero), 1 = check failed, 2 = usage error.
"""

from __future__ import annotations

import os
import sys
import time

import click

from . import concrete as conc
from . import jordan as jd
from .freealg import DEFAULT_GENERATOR_CAP, Mode
from .report import Report

MODE_CHOICE = click.Choice(["com", "noncom"])


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("NJORDAN_THREADS", "1")))
    except ValueError:
        return 1


def _config(n: int, a_mode: str, b_mode: str, threads: int, force: bool,
            min_n: int = 2) -> jd.JordanConfig:
    if n < min_n:
        raise click.UsageError(f"--n must be at least {min_n}")
    if n > 7 and not force:
        raise click.UsageError("n > 7 grows as n^n; pass --force to override")
    return jd.JordanConfig(
        n=n,
        a_mode=Mode.parse(a_mode),
        b_mode=Mode.parse(b_mode),
        cap=max(DEFAULT_GENERATOR_CAP, n),
        threads=threads,
    )


def _emit(report: Report, fmt: str, out: str | None) -> None:
    text = report.to_json() if fmt == "json" else report.to_text()
    click.echo(text, nl=False)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    sys.exit(0 if report.passed else 1)


def common_options(fn):
    fn = click.option("--a-mode", type=MODE_CHOICE, default="com",
                      show_default=True, help="Domain algebra mode.")(fn)
    fn = click.option("--b-mode", type=MODE_CHOICE, default="com",
                      show_default=True, help="Codomain algebra mode.")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                      default="text", show_default=True)(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Also write the report to this path.")(fn)
    fn = click.option("--threads", type=int, default=_default_threads,
                      help="Worker threads for subset expansions.")(fn)
    fn = click.option("--force", is_flag=True, help="Allow n > 7.")(fn)
    return fn


@click.group()
def cli():
    """Symbolic verifier for n-Jordan homomorphism identities."""


@cli.command()
@click.option("--n", type=int, required=True)
@common_options
def verify(n, a_mode, b_mode, fmt, out, threads, force):
    """Check psi({1..n}) equals the symmetrized defect."""
    cfg = _config(n, a_mode, b_mode, threads, force)
    _emit(jd.verify_theorem(cfg), fmt, out)


@cli.command()
@click.option("--n", type=int, required=True)
@common_options
def decompose(n, a_mode, b_mode, fmt, out, threads, force):
    """Check phi({1..n}) equals the sum of psi over all nonempty subsets."""
    cfg = _config(n, a_mode, b_mode, threads, force)
    _emit(jd.verify_decomposition(cfg), fmt, out)


@cli.command()
@click.option("--n", type=int, required=True)
@common_options
def collapse(n, a_mode, b_mode, fmt, out, threads, force):
    """Check the commutative collapse factor equals n!."""
    if a_mode != "com" or b_mode != "com":
        raise click.UsageError("collapse requires --a-mode com --b-mode com")
    cfg = _config(n, a_mode, b_mode, threads, force)
    _emit(jd.verify_collapse(cfg), fmt, out)


@cli.command()
@click.option("--n", type=int, required=True)
@common_options
def refute(n, a_mode, b_mode, fmt, out, threads, force):
    """Refute the claimed decomposition formula (exit 0 = residual nonzero)."""
    cfg = _config(n, a_mode, b_mode, threads, force, min_n=4)
    started = time.perf_counter()
    result = jd.refute_cheshmavar(cfg)
    multiplicities = {
        jd.render_subset(pair): {"lhs": counts[0], "rhs": counts[1]}
        for pair, counts in result.multiplicities.items()
    }
    pair12 = frozenset({1, 2})
    witness = jd.b_exact_varset_component(result.residual, pair12)
    payload = {
        "formula": "phi(full) = sum of phi over mid-size subsets + n! * plain defect",
        "residual_nonzero": result.residual_nonzero(),
        "residual_terms": len(result.residual),
        "residual_component_{1,2}": witness.render(),
        "multiplicities": multiplicities,
    }
    report = Report("refute", n, a_mode, b_mode,
                    "pass" if result.residual_nonzero() else "fail",
                    round((time.perf_counter() - started) * 1000, 3), payload)
    _emit(report, fmt, out)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--cert-out", type=click.Path(dir_okay=False), default=None,
              help="Write the raw certificate file to this path.")
@common_options
def certificate(n, cert_out, a_mode, b_mode, fmt, out, threads, force):
    """Emit the signed phi combination reproducing the symmetrized defect."""
    cfg = _config(n, a_mode, b_mode, threads, force)
    started = time.perf_counter()
    cert = jd.emit_certificate(cfg)
    if cert_out:
        with open(cert_out, "w") as fh:
            fh.write(cert.render())
    payload = {
        "entries": cert.render().strip().splitlines()[:-1],
        "target_hash": cert.target_hash,
        "entry_count": len(cert.entries),
        "verified": True,
    }
    report = Report("certificate", n, a_mode, b_mode, "pass",
                    round((time.perf_counter() - started) * 1000, 3), payload)
    _emit(report, fmt, out)


@cli.command("concrete")
@click.option("--algebra", required=True,
              help="Builtin name (diag1..4, trunc2..5, m2) or definition file.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def concrete_cmd(algebra, fmt, out):
    """Build and validate a structure-constant algebra."""
    started = time.perf_counter()
    try:
        alg = conc.resolve_algebra(algebra)
    except conc.NonAssociativeError as exc:
        report = Report("concrete", 0, "com", "com", "fail",
                        round((time.perf_counter() - started) * 1000, 3),
                        {"algebra": algebra, "associative": False,
                         "witness_triple": list(exc.witness)})
        _emit(report, fmt, out)
    except (OSError, ValueError) as exc:
        raise click.UsageError(str(exc))
    payload = {
        "algebra": alg.name,
        "dim": alg.dim,
        "labels": list(alg.labels),
        "associative": True,
        "commutative": alg.commutative,
    }
    report = Report("concrete", 0, "com" if alg.commutative else "noncom",
                    "com" if alg.commutative else "noncom", "pass",
                    round((time.perf_counter() - started) * 1000, 3), payload)
    _emit(report, fmt, out)


@cli.command("cross-validate")
@click.option("--n", type=int, required=True)
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--algebra-a", default=None,
              help="Domain algebra (builtin name or file); default fits the mode.")
@click.option("--algebra-b", default=None,
              help="Codomain algebra (builtin name or file); default fits the mode.")
@common_options
def cross_validate_cmd(n, trials, seed, algebra_a, algebra_b,
                       a_mode, b_mode, fmt, out, threads, force):
    """Evaluate both sides of the symbolic identities in a concrete algebra."""
    if trials < 1:
        raise click.UsageError("--trials must be >= 1")
    cfg = _config(n, a_mode, b_mode, threads, force)
    try:
        alg_a = conc.resolve_algebra(algebra_a) if algebra_a else None
        alg_b = conc.resolve_algebra(algebra_b) if algebra_b else None
    except (OSError, ValueError) as exc:
        raise click.UsageError(str(exc))
    _emit(conc.cross_validate(cfg, trials, seed, alg_a, alg_b), fmt, out)


def main():
    cli()


if __name__ == "__main__":
    main()
