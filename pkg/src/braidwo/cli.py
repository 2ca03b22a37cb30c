"""Command-line front end of the workbench.

braidwo normalize 212
braidwo hydra run 2211 --trace
braidwo --json verify all --workers 4
"""

from dataclasses import dataclass, field
import logging
from pathlib import Path
from typing import Any, Dict, Iterator, List

import click

from .braid.congruence import sigma_positive_witness
from .braid.expseq import ExpSeq, compare, parse_expseq, shortlex_key, word_of
from .braid.garside import bridge_constant, complexity, d_of, divisor_closure, greedy_nf, grouped_form
from .braid.normal_form import normalize
from .braid.word import format_word, parse_word
from .config import get_config, load_config, set_config
from .divisors.counting import card_S, card_S_bound, growth_fit, leading_coefficient, total_count
from .divisors.enumeration import enumerate_divisors
from .divisors.s_sets import enumerate_S
from .errors import (
    BudgetExhausted,
    CapExceededError,
    NotSpecialError,
    OrdinalSyntaxError,
    TreeSyntaxError,
    WordSyntaxError,
)
from .hydra.dynamics import hydra_length, hydra_length_fast, ord3, run, u_function
from .hydra.game import Battle
from .hydra.mirror import mirror_check
from .manifest import RunManifest
from .ordinals.ackermann import ack_inv, ack_r_inv, ackermann
from .ordinals.cnf import Ordinal, format_ordinal, parse_ordinal
from .ordinals.fundamental import fundamental
from .ordinals.hardy import hardy
from .ordinals.intmath import sci_digest
from .outcomes import (
    ABOVE_CUTOFF,
    EXHAUSTED,
    ExponentConvention,
    FundamentalVariant,
    ThetaConvention,
    get_available_enum_values,
)
from .serialization import allow_huge_ints, dumps, json_serialize_bignat, to_jsonable
from .special.dynamics import mirror_check_sp, mirror_sweep_sp, ord_sp, run_sp
from .special.skew import parse_special, special_word, splitting
from .special.tree import SkewTree, format_tree, parse_tree_text
from .timer import Timer
from .wo.dilation import DEFAULT_WINDOW, dilation_window
from .wo.experiment import wo_experiment
from .wo.growth import GrowthSpec, parse_growth
from .wo.simple import exhaustive_longest, longest_simple

logger = logging.getLogger(__name__)

EXIT_VERIFICATION_FAILURE = 1
EXIT_BUDGET_EXHAUSTED = 3


class BudgetExhaustedExit(click.ClickException):
    exit_code = EXIT_BUDGET_EXHAUSTED


class BraidParamType(click.ParamType):
    """A positive 3-braid given as a word ("2211") or an exponent sequence ("(2,2)")."""

    name = "braid"

    def convert(self, value, param, ctx) -> ExpSeq:
        if isinstance(value, ExpSeq):
            return value
        try:
            if value.strip().startswith("("):
                b = parse_expseq(value)
                return b if b.is_normal else normalize(word_of(b))
            return normalize(parse_word(value, strands=3))
        except (WordSyntaxError, ValueError) as exc:
            self.fail(str(exc), param, ctx)


class WordParamType(click.ParamType):
    name = "word"

    def __init__(self, strands: int | None = None):
        self.strands = strands

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return parse_word(value, strands=self.strands)
        except WordSyntaxError as exc:
            self.fail(str(exc), param, ctx)


class OrdinalParamType(click.ParamType):
    name = "ordinal"

    def convert(self, value, param, ctx) -> Ordinal:
        if isinstance(value, Ordinal):
            return value
        try:
            return parse_ordinal(value)
        except OrdinalSyntaxError as exc:
            self.fail(str(exc), param, ctx)


class TreeParamType(click.ParamType):
    """A skew tree in text form ("[3: <2>, <0>]") or a special word prefixed by its strand count ("3:122221")."""

    name = "tree"

    def convert(self, value, param, ctx) -> SkewTree:
        if not isinstance(value, str):
            return value
        try:
            if value.strip()[:1] in "<[":
                return parse_tree_text(value)
            n, _, word = value.partition(":")
            return parse_special(int(n), parse_word(word))
        except (TreeSyntaxError, NotSpecialError, WordSyntaxError, ValueError) as exc:
            self.fail(str(exc), param, ctx)


class GrowthParamType(click.ParamType):
    name = "growth"

    def convert(self, value, param, ctx) -> GrowthSpec:
        if isinstance(value, GrowthSpec):
            return value
        try:
            spec = parse_growth(value)
            spec.build()
        except ValueError as exc:
            self.fail(str(exc), param, ctx)
        return spec


BRAID = BraidParamType()
WORD = WordParamType()
WORD3 = WordParamType(strands=3)
ORDINAL = OrdinalParamType()
TREE = TreeParamType()
GROWTH = GrowthParamType()


@dataclass
class Session:
    as_json: bool = False
    sci: bool = False
    manifest_path: Path | None = None
    timer: Timer = field(default_factory=lambda: Timer("braidwo"))
    manifest: RunManifest | None = None

    def bignat(self, value: int):
        return json_serialize_bignat(value, self.sci)

    def bignat_text(self, value: int) -> str:
        return sci_digest(value) if self.sci else str(value)

    def emit(self, payload: Dict[str, Any], lines: str | List[str]):
        ctx = click.get_current_context()
        if self.manifest is None:
            self.manifest = RunManifest(command=ctx.command_path, parameters=to_jsonable(ctx.params))
        self.manifest.add_outcome(**to_jsonable(payload, self.sci))

        if self.as_json:
            click.echo(dumps(payload, self.sci))
        else:
            for line in [lines] if isinstance(lines, str) else lines:
                click.echo(line)

    def close(self):
        if self.manifest_path is None or self.manifest is None:
            return
        self.manifest.finish(self.timer)
        self.manifest.save(self.manifest_path)


class WorkbenchGroup(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except BudgetExhausted as exc:
            detail = f" ({exc.progress})" if exc.progress else ""
            raise BudgetExhaustedExit(f"Budget exhausted: {exc}{detail}") from exc
        except CapExceededError as exc:
            raise click.UsageError(str(exc), ctx) from exc


def _session() -> Session:
    return click.get_current_context().find_object(Session)


def _fail(message: str):
    click.echo(message, err=True)
    click.get_current_context().exit(EXIT_VERIFICATION_FAILURE)


@click.group(cls=WorkbenchGroup)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="YAML configuration file.")
@click.option("-v", "--verbose", count=True, help="Repeat for more detail.")
@click.option("-q", "--quiet", is_flag=True)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--sci", is_flag=True, help="Add leading-digit digests to big numbers.")
@click.option("--manifest", "manifest_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_context
def cli(ctx, config_path, verbose, quiet, as_json, sci, manifest_path):
    allow_huge_ints()
    if quiet:
        level = logging.ERROR
    else:
        level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", force=True)

    if config_path is not None:
        try:
            set_config(load_config(config_path))
        except (FileNotFoundError, ValueError) as exc:
            raise click.BadParameter(str(exc), param_hint="--config") from exc

    session = Session(as_json=as_json, sci=sci, manifest_path=manifest_path)
    ctx.obj = session
    ctx.call_on_close(session.close)


# braid-core and garside


@cli.command(name="normalize")
@click.argument("word", type=WORD3)
def normalize_cmd(word):
    """phi-normal exponent sequence of a positive 3-braid word."""
    b = normalize(word)
    _session().emit(
        {"word": format_word(word), "expseq": str(b), "normal_word": format_word(word_of(b))},
        str(b),
    )


@cli.command(name="compare")
@click.argument("a", type=BRAID)
@click.argument("b", type=BRAID)
@click.option("--witness", is_flag=True, help="Search a sigma-positive expression of a^-1 b.")
def compare_cmd(a, b, witness):
    result = compare(a, b)
    payload = {"a": str(a), "b": str(b), "result": result.name}
    lines = [result.name]
    if witness and a != b:
        low, high = (a, b) if result.name == "LESS" else (b, a)
        w = sigma_positive_witness(low, high)
        payload["witness"] = w.value if w is EXHAUSTED else format_word(w)
        lines.append(f"{low}^-1 {high} = {payload['witness']}")
    _session().emit(payload, lines)


@cli.command(name="complexity")
@click.argument("b", type=BRAID)
def complexity_cmd(b):
    c = complexity(b)
    payload = {"braid": str(b), "complexity": c, "length": b.length, "breadth": b.breadth, "d": d_of(b)}
    lines = [f"complexity {c}", f"length {b.length}, breadth {b.breadth}, d {d_of(b)}"]
    if not b.is_trivial:
        payload["C"] = bridge_constant(b)
        lines.append(f"C {payload['C']}")
    _session().emit(payload, lines)


@cli.command(name="greedy")
@click.argument("b", type=BRAID)
def greedy_cmd(b):
    g = greedy_nf(b)
    factors = [format_word(f) for f in g.factors]
    _session().emit(
        {"braid": str(b), "factors": factors, "delta_power": g.d, "groups": list(grouped_form(g))},
        " . ".join(factors + [f"Delta^{g.d}"]),
    )


# ordinals


@cli.command(name="ord")
@click.argument("b", type=BRAID)
def ord_cmd(b):
    alpha = ord3(b)
    _session().emit({"braid": str(b), "ordinal": alpha}, format_ordinal(alpha))


VARIANT_OPTION = click.option(
    "--variant",
    type=click.Choice(get_available_enum_values(FundamentalVariant)),
    default=FundamentalVariant.STANDARD.value,
    show_default=True,
)


@cli.command(name="fundseq")
@click.argument("ordinal", type=ORDINAL)
@click.argument("x", type=click.IntRange(min=0))
@VARIANT_OPTION
def fundseq_cmd(ordinal, x, variant):
    value = fundamental(ordinal, x, FundamentalVariant(variant))
    _session().emit({"ordinal": ordinal, "x": x, "variant": variant, "value": value}, format_ordinal(value))


@cli.command(name="hardy")
@click.argument("ordinal", type=ORDINAL)
@click.argument("x", type=click.IntRange(min=0))
@VARIANT_OPTION
@click.option("--budget-bits", type=click.IntRange(min=1), default=None)
def hardy_cmd(ordinal, x, variant, budget_bits):
    session = _session()
    value = hardy(ordinal, x, FundamentalVariant(variant), budget_bits)
    session.emit(
        {"ordinal": ordinal, "x": x, "variant": variant, "value": session.bignat(value)},
        session.bignat_text(value),
    )


@cli.command(name="ack")
@click.argument("r", type=click.IntRange(min=0))
@click.argument("x", type=click.IntRange(min=0))
def ack_cmd(r, x):
    session = _session()
    cutoff = 1 << get_config().hardy_budget_bits
    value = ackermann(r, x, cutoff)
    if value is ABOVE_CUTOFF:
        session.emit({"r": r, "x": x, "value": value.value}, value.value)
    else:
        session.emit({"r": r, "x": x, "value": session.bignat(value)}, session.bignat_text(value))


@cli.command(name="ackinv")
@click.argument("x", type=click.IntRange(min=0))
@click.option("--level", "r", type=click.IntRange(min=0), default=None, help="Invert Ack_r instead of the diagonal.")
def ackinv_cmd(x, r):
    value = ack_inv(x) if r is None else ack_r_inv(r, x)
    _session().emit({"x": x, "level": r, "value": value}, str(value))


# hydra


@cli.group(name="hydra")
def hydra_group():
    """The 3-strand hydra sequences b{1}{2}...{t}."""


@hydra_group.command(name="run")
@click.argument("b", type=BRAID)
@click.option("--trace/--no-trace", default=False)
@click.option("--max-steps", type=click.IntRange(min=0), default=None)
@click.option("--trace-out", type=click.Path(dir_okay=False, path_type=Path), default=None)
def hydra_run(b, trace, max_steps, trace_out):
    result = run(b, max_steps)
    lines = result.export_lines()
    if trace_out is not None:
        trace_out.write_text("\n".join(lines) + "\n")
    payload = {"braid": str(b), "length": result.length, "terminated": result.terminated}
    if trace:
        payload["trace"] = [str(s.braid) for s in result.states]
    text = (lines if trace else []) + [
        f"{'terminated' if result.terminated else 'truncated'} after {result.length} steps"
    ]
    _session().emit(payload, text)
    if not result.terminated:
        raise BudgetExhausted(f"Hydra sequence from {b} truncated at {result.length} steps", result.length)


@hydra_group.command(name="length")
@click.argument("b", type=BRAID)
@click.option("--stepwise", is_flag=True, help="Iterate every step instead of skipping phases.")
def hydra_length_cmd(b, stepwise):
    session = _session()
    value = hydra_length(b) if stepwise else hydra_length_fast(b)
    session.emit({"braid": str(b), "length": session.bignat(value)}, session.bignat_text(value))


@hydra_group.command(name="u")
@click.argument("k", type=click.IntRange(min=0))
def hydra_u(k):
    session = _session()
    value = u_function(k)
    session.emit({"k": k, "U": session.bignat(value)}, session.bignat_text(value))


def _battle_inputs(script: Path | None) -> Iterator[str]:
    if script is not None:
        for line in script.read_text().splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                yield line
        return
    while True:
        yield click.prompt("position", default="quit", show_default=False)


@hydra_group.command(name="battle")
@click.argument("b", type=BRAID)
@click.option("--script", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None)
@click.option("--trace-out", type=click.Path(dir_okay=False, path_type=Path), default=Path("battle_trace.txt"), show_default=True)
def hydra_battle(b, script, trace_out):
    """Play the hydra game: choose a permitted position at every step."""
    if b.is_trivial:
        raise click.BadParameter("The trivial braid has no hydra to fight", param_hint="B")
    battle = Battle(b)
    inputs = _battle_inputs(script)
    while not battle.won:
        permitted = battle.permitted()
        click.echo(f"step {battle.t + 1}: {battle.braid}  permitted {permitted}")
        choice = next(inputs, "quit").strip()
        if choice in ("quit", "q"):
            break
        try:
            battle.play(int(choice))
        except ValueError:
            click.echo(f"Choose one of {permitted} or 'quit'")

    battle.save_trace(trace_out)
    if battle.won:
        click.echo(f"Victory after {battle.t} steps")
    _session().emit(
        {"start": str(b), "steps": battle.t, "won": battle.won, "trace": str(trace_out)},
        f"Trace saved to {trace_out}",
    )


@cli.command(name="mirror")
@click.argument("b", type=BRAID)
@click.option("--horizon", type=click.IntRange(min=1), default=None)
def mirror_cmd(b, horizon):
    if horizon is None:
        horizon = get_config().verify.mirror_horizon
    report = mirror_check(b, horizon)
    lines = [
        f"{r.t}\t{r.case}\t{r.ord_before} -> {r.ord_after}\t"
        f"{'ok' if r.matches_standard else ('offset' if r.matches_adapted else 'MISMATCH')}"
        for r in report.records
    ]
    _session().emit(
        {
            "report": report,
            "standard_mismatches": report.standard_mismatches,
            "unexplained_mismatches": report.unexplained_mismatches,
        },
        lines,
    )
    if report.unexplained_mismatches:
        _fail(f"{report.unexplained_mismatches} unexplained mismatches")


# divisors


@cli.group(name="enum")
def enum_group():
    """Increasing enumerations of divisor sets."""


@enum_group.command(name="divisors")
@click.argument("ell", type=click.IntRange(min=0))
@click.option("--mode", type=click.Choice(["recursive", "brute", "closure"]), default="recursive", show_default=True)
def enum_divisors(ell, mode):
    if mode == "closure":
        entries = sorted(divisor_closure(ell), key=shortlex_key)
    else:
        entries = list(enumerate_divisors(ell, mode=mode))
    _session().emit(
        {"ell": ell, "mode": mode, "count": len(entries), "entries": [str(b) for b in entries]},
        [f"{i}\t{b}" for i, b in enumerate(entries, start=1)],
    )


@enum_group.command(name="s")
@click.argument("k", type=click.IntRange(min=1))
@click.argument("ell", type=click.IntRange(min=1))
def enum_s(k, ell):
    if k > ell:
        raise click.BadParameter(f"S(k, ell) needs k <= ell: k={k}, ell={ell}")
    entries = enumerate_S(k, ell)
    _session().emit(
        {"k": k, "ell": ell, "count": len(entries), "entries": [str(b) for b in entries]},
        [f"{i}\t{b}" for i, b in enumerate(entries, start=1)],
    )


@cli.group(name="count")
def count_group():
    """Closed counting formulas."""


@count_group.command(name="total")
@click.argument("ell", type=click.IntRange(min=0))
def count_total(ell):
    session = _session()
    value = total_count(ell)
    session.emit({"ell": ell, "count": session.bignat(value)}, session.bignat_text(value))


@count_group.command(name="s")
@click.argument("k", type=click.IntRange(min=1))
@click.argument("ell", type=click.IntRange(min=1))
@click.option("--fit-up-to", type=click.IntRange(min=2), default=None, help="Fit the growth of card S(k, .) over [k, N].")
def count_s(k, ell, fit_up_to):
    if k > ell:
        raise click.BadParameter(f"card S(k, ell) needs k <= ell: k={k}, ell={ell}")
    session = _session()
    value, bound = card_S(k, ell), card_S_bound(k, ell)
    payload = {"k": k, "ell": ell, "count": session.bignat(value), "bound": session.bignat(bound)}
    lines = [session.bignat_text(value), f"bound (ell+3)^(k+2) = {session.bignat_text(bound)}"]
    if fit_up_to is not None:
        ells = list(range(k, max(fit_up_to, k + 2 * (k + 2)) + 1))
        payload["fit_leading"] = growth_fit(k, ells)
        payload["expected_leading"] = leading_coefficient(k)
        lines.append(f"fitted leading coefficient {payload['fit_leading']:.6g}, 1/(k+1)! = {payload['expected_leading']:.6g}")
    session.emit(payload, lines)


# WO harness


@cli.group(name="wo")
def wo_group():
    """(k, f)-simple descending sequences."""


@wo_group.command(name="longest")
@click.argument("k", type=click.IntRange(min=0))
@click.argument("growth", type=GROWTH)
@click.option("--budget", type=click.IntRange(min=1), default=None)
@click.option("--exhaustive", is_flag=True, help="Tree search instead of the greedy engine.")
@click.option("--horizon", type=click.IntRange(min=1), default=64, show_default=True)
def wo_longest(k, growth, budget, exhaustive, horizon):
    result = exhaustive_longest(k, growth, horizon) if exhaustive else longest_simple(k, growth, budget)
    entries = [str(b) for b in result.witness.entries]
    _session().emit(
        {
            "k": k,
            "growth": growth,
            "length": result.length,
            "outcome": result.outcome,
            "note": result.note,
            "witness": entries,
        },
        [f"{result.outcome.value} {result.length}" + (f" ({result.note})" if result.note else "")] + entries,
    )


@wo_group.command(name="dilate")
@click.argument("k", type=click.IntRange(min=1))
@click.argument("t_first", type=click.IntRange(min=0))
@click.argument("t_last", type=click.IntRange(min=0))
@click.option("--window", type=click.IntRange(min=1), default=DEFAULT_WINDOW, show_default=True)
def wo_dilate(k, t_first, t_last, window):
    report = dilation_window(k, t_first, t_last, window)
    lines = [f"h({k}) = {report.h}"]
    lines.extend(f"{r.t}\t{r.entry}\t{r.complexity} <= {r.bound}" for r in report.rows)
    lines.extend(f"violation: {v}" for v in report.violations)
    _session().emit({"report": report, "ok": report.ok}, lines)
    if not report.ok:
        _fail(f"{len(report.violations)} violations of the dilation constraints")


@wo_group.command(name="experiment")
@click.argument("k", type=click.IntRange(min=0))
@click.argument("growth", type=GROWTH)
@click.option("--budget", type=click.IntRange(min=1), default=None)
@click.option("--witness-out", type=click.Path(dir_okay=False, path_type=Path), default=None)
def wo_experiment_cmd(k, growth, budget, witness_out):
    report = wo_experiment(k, growth, budget, witness_out)
    _session().emit(
        {"report": report},
        f"{report.outcome.value} {report.length} in {report.wall_time_s:.3f} s"
        + (f" ({report.note})" if report.note else ""),
    )


# special braids


@cli.group(name="special")
def special_group():
    """Special braids on n strands as skew trees."""


@special_group.command(name="skew")
@click.argument("tree", type=TREE)
@click.option("--splitting", "show_splitting", is_flag=True)
def special_skew(tree, show_splitting):
    word = format_word(special_word(tree))
    payload = {"tree": tree, "word": word}
    lines = [word]
    if show_splitting:
        factors = [format_word(f) for f in splitting(tree)]
        payload["splitting"] = factors
        lines.append("splitting: " + ", ".join(factors))
    _session().emit(payload, lines)


@special_group.command(name="parse")
@click.argument("n", type=click.IntRange(min=2))
@click.argument("word", type=WORD)
def special_parse(n, word):
    try:
        tree = parse_special(n, word)
    except NotSpecialError as exc:
        _session().emit({"word": format_word(word), "special": False, "position": exc.position}, f"NOT_SPECIAL: {exc}")
        click.get_current_context().exit(EXIT_VERIFICATION_FAILURE)
    _session().emit({"word": format_word(word), "special": True, "tree": tree}, format_tree(tree))


THETA_OPTION = click.option(
    "--theta",
    type=click.Choice(get_available_enum_values(ThetaConvention)),
    default=ThetaConvention.MIRROR_EXACT.value,
    show_default=True,
)
EXPONENT_OPTION = click.option(
    "--exponent",
    type=click.Choice(get_available_enum_values(ExponentConvention)),
    default=ExponentConvention.N_MINUS_3.value,
    show_default=True,
)


@special_group.command(name="run")
@click.argument("tree", type=TREE)
@THETA_OPTION
@click.option("--max-steps", type=click.IntRange(min=0), default=None)
def special_run(tree, theta, max_steps):
    trace = run_sp(tree, max_steps, ThetaConvention(theta))
    _session().emit(
        {"tree": tree, "length": trace.length, "terminated": trace.terminated, "trace": trace.words()},
        trace.export_lines() + [f"{'terminated' if trace.terminated else 'truncated'} after {trace.length} steps"],
    )
    if not trace.terminated:
        raise BudgetExhausted(f"Special sequence truncated at {trace.length} steps", trace.length)


@special_group.command(name="ord")
@click.argument("tree", type=TREE)
@EXPONENT_OPTION
def special_ord(tree, exponent):
    alpha = ord_sp(tree, ExponentConvention(exponent))
    _session().emit({"tree": tree, "exponent": exponent, "ordinal": alpha}, format_ordinal(alpha))


@special_group.command(name="mirror")
@click.argument("tree", type=TREE)
@click.option("--horizon", type=click.IntRange(min=1), default=None)
@THETA_OPTION
@EXPONENT_OPTION
@click.option("--sweep", is_flag=True, help="Every combination of the two conventions.")
def special_mirror(tree, horizon, theta, exponent, sweep):
    if horizon is None:
        horizon = get_config().verify.special_horizon
    if sweep:
        reports = mirror_sweep_sp(tree, horizon)
        _session().emit(
            {"reports": reports, "mismatches": {key: r.mismatches for key, r in reports.items()}},
            [f"{key}: {r.mismatches} mismatches in {len(r.records)} steps" for key, r in sorted(reports.items())],
        )
        return

    report = mirror_check_sp(tree, horizon, ThetaConvention(theta), ExponentConvention(exponent))
    lines = [
        f"{r.t}\t{r.case}\t{r.ord_before} -> {r.ord_after}\t{'ok' if r.matches else 'MISMATCH ' + r.prediction}"
        for r in report.records
    ]
    _session().emit({"report": report, "mismatches": report.mismatches}, lines)
    if report.mismatches:
        _fail(f"{report.mismatches} mismatches")


# verification


@cli.command(name="verify")
@click.argument("suites", nargs=-1)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
def verify_cmd(suites, workers):
    """Run acceptance suites by name, or all of them."""
    from .verify.runner import resolve_suite_names, run_suites

    try:
        names = resolve_suite_names(suites)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="SUITES") from exc

    results = run_suites(names, workers=workers)
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.suite} (criterion {r.criterion}, {r.wall_time_s:.2f} s)")
        if r.error:
            lines.append(f"    error: {r.error}")
        for c in r.checks:
            mark = "ok" if c.passed else "FAILED"
            lines.append(f"    {mark}: {c.name}" + (f" [{c.detail}]" if c.detail and not c.passed else ""))

    passed = all(r.passed for r in results)
    _session().emit(
        {
            "passed": passed,
            "suites": [
                {
                    "suite": r.suite,
                    "criterion": r.criterion,
                    "passed": r.passed,
                    "error": r.error,
                    "checks": r.checks,
                }
                for r in results
            ],
        },
        lines,
    )
    if not passed:
        _fail("Verification failed")


if __name__ == "__main__":
    cli()
