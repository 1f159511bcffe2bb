from __future__ import annotations
import argparse
import datetime as dt
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Optional
import pandas as pd
import modules.main.util.constants as C
import modules.main.util.utilities as utilities
from modules.main.configs.potent_configs import PotentConfigs
from modules.main.configs.potent_configs_validation import PotentConfigsException
from modules.main.degseq.degree_sequence import (
    PotentInputException,
    PotentNotGraphicalException,
    enumerate_graphical_sequences,
    is_graphical,
    read_sequences,
    sigma_sum,
)
from modules.main.extension.cycle_extender import (
    ExtensionContext,
    PotentContradictionException,
    PotentHypothesisException,
    extend_cycle,
    find_extension_context,
)
from modules.main.graph.patterns import PatternGraph, clique, cycle, matching
from modules.main.graph.simple_graph import CycleWitness, PotentGraphException, SimpleGraph
from modules.main.sigma.bound_checks import (
    check_even_cycle_bound,
    reports_frame,
    survey_odd_cycle_hypotheses,
    verify_lower_bound,
)
from modules.main.sigma.sigma_oracle import format_sigma_records, sigma_oracle
from modules.main.sigma.sigma_table import build_sigma_table, format_frame, sigma_table_frame
from modules.main.switchspace.realization_space import SearchBudget, is_forcibly, is_potentially


logger = logging.getLogger(__name__)


CHECK = "check"
POTENTIALLY = "potentially"
FORCIBLY = "forcibly"
ENUMERATE = "enumerate"
SIGMA = "sigma"
SIGMA_TABLE = "sigma-table"
EXTEND = "extend"
LOWER_BOUND = "lower-bound"
HYPOTHESES = "hypotheses"
EVEN_BOUND = "even-bound"


@dataclass(frozen=True)
class RunConfig:
    """
    One CLI invocation, with config-file values and flag overrides merged.

    Attributes:
        command (str): The subcommand.
        pattern (PatternGraph): The target subgraph, for the commands that take one.
        n_values (tuple): The sequence lengths, from `--n` or `--n-range`.
        min_sum (int): The smallest sum to enumerate.
        budget (SearchBudget): The realization walk caps.
        jobs (int): Sigma oracle worker processes.
        output_format (str): json, csv or text.
        output_path (str): Where to write the output. None prints it.
    """

    command: str
    pattern: Optional[PatternGraph]
    n_values: tuple
    min_sum: int
    budget: SearchBudget
    jobs: int
    output_format: str
    output_path: Optional[str]


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Path to a JSON config file.")
    common.add_argument("--max-states", type=int, help="Most realizations one walk may visit.")
    common.add_argument("--max-moves", type=int, help="Most 2-switches one walk may apply.")
    common.add_argument("--jobs", type=int, help="Sigma oracle worker processes.")
    common.add_argument("--format", choices=C.OUTPUT_FORMATS, help="Output format.")
    common.add_argument("--out", help="Write the output here instead of printing it.")

    pattern = argparse.ArgumentParser(add_help=False)
    group = pattern.add_mutually_exclusive_group(required=True)
    group.add_argument("--cycle", type=int, metavar="K", help="The cycle C_K.")
    group.add_argument("--clique", type=int, metavar="K", help="The complete graph K_K.")
    group.add_argument("--matching", type=int, metavar="P", help="The matching of P disjoint edges.")

    sequences = argparse.ArgumentParser(add_help=False)
    sequences.add_argument("sequence", nargs="?", help="A sequence such as `2,2,2` or `8 8 8 3 3 3 3 3 3`.")
    sequences.add_argument("--file", help="A file with one sequence per line.")

    lengths = argparse.ArgumentParser(add_help=False)
    n_group = lengths.add_mutually_exclusive_group(required=True)
    n_group.add_argument("--n", type=int, help="The sequence length.")
    n_group.add_argument("--n-range", help="Sequence lengths `A..B`, inclusive.")

    parser = argparse.ArgumentParser(prog="potent", description="Potentially H-graphic sequences and sigma(H, n).")
    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser(CHECK, parents=[common, sequences], help="Check graphicality and print sigma(S).")
    for command in (POTENTIALLY, FORCIBLY):
        subparser = subparsers.add_parser(command, parents=[common, pattern, sequences], help=f"Decide {command} H-graphic.")
        subparser.add_argument("--witness-out", help="Write witness realizations here in the graph text format.")

    subparser = subparsers.add_parser(ENUMERATE, parents=[common, lengths], help="List graphical sequences.")
    subparser.add_argument("--min-sum", type=int, default=0, help="The smallest sum to list.")
    subparsers.add_parser(SIGMA, parents=[common, pattern, lengths], help="Compute sigma(H, n) by brute force.")
    subparsers.add_parser(SIGMA_TABLE, parents=[common, pattern, lengths], help="Compare sigma(H, n) with its formula.")

    subparser = subparsers.add_parser(EXTEND, parents=[common], help="Extend a k-cycle to a (k + 1)-cycle.")
    subparser.add_argument("--graph", required=True, help="A file in the graph text format.")
    subparser.add_argument("--on-cycle", required=True, help="The cycle's vertices in order, e.g. `0,1,2,3`.")
    subparser.add_argument("--x", type=int, help="A vertex off the cycle. Picked automatically if omitted.")
    subparser.add_argument("--w", type=int, help="A vertex on the cycle. Picked automatically if omitted.")
    subparser.add_argument("--witness-out", help="Write the extended graph here in the graph text format.")

    subparser = subparsers.add_parser(LOWER_BOUND, parents=[common, lengths], help="Certify an extremal construction.")
    subparser.add_argument("--kind", choices=(C.ODD, C.EVEN), required=True, help="Odd (C_2m+1) or even (C_2m+2) target.")
    subparser.add_argument("--m", type=int, required=True, help="The clique size m.")

    subparser = subparsers.add_parser(HYPOTHESES, parents=[common, lengths], help="Survey the odd-cycle bound hypotheses.")
    subparser.add_argument("--m", type=int, required=True, help="The target is C_2m+1. At least 3.")

    subparser = subparsers.add_parser(EVEN_BOUND, parents=[common], help="Check sigma(C_2m+2, 3m+t) against its upper bound.")
    subparser.add_argument("--m", type=int, required=True, help="At least 3.")
    subparser.add_argument("--t-range", default="0", help="Values of t `A..B`, inclusive, within 0..2m-2.")
    return parser


def _load_configs(config_path: Optional[str]) -> Optional[PotentConfigs]:
    """Load the given config file, or the default one if it exists."""
    if config_path:
        return PotentConfigs(configs_file_path=config_path)
    if os.path.exists(C.DEFAULT_CONFIG_FILE_PATH):
        return PotentConfigs()
    return None


def _setup_logging(configs: Optional[PotentConfigs]) -> None:
    log_file_path = configs.get_log_file_path() if configs else C.DEFAULT_LOG_FILE_PATH
    log_level = configs.get_log_level() if configs else C.DEFAULT_LOG_LEVEL
    log_directory = os.path.dirname(log_file_path)
    if log_directory:
        os.makedirs(log_directory, exist_ok=True)
    logging.basicConfig(filename=log_file_path, level=log_level)


def _pattern_from_args(args: argparse.Namespace) -> Optional[PatternGraph]:
    if getattr(args, "cycle", None) is not None:
        return cycle(args.cycle)
    if getattr(args, "clique", None) is not None:
        return clique(args.clique)
    if getattr(args, "matching", None) is not None:
        return matching(args.matching)
    return None


def _n_values_from_args(args: argparse.Namespace) -> tuple:
    if getattr(args, "n", None) is not None:
        return (args.n,)
    if getattr(args, "n_range", None) is not None:
        return tuple(utilities.parse_int_range(args.n_range))
    return ()


def make_run_config(args: argparse.Namespace, configs: Optional[PotentConfigs]) -> RunConfig:
    """Merge parsed flags over config values (or the built-in defaults when there's no config file)."""

    def pick(flag_value, config_getter: str, default):
        if flag_value is not None:
            return flag_value
        return getattr(configs, config_getter)() if configs else default

    jobs = pick(args.jobs, "get_jobs", C.DEFAULT_JOBS)
    if jobs < 1:
        raise PotentInputException(f"--jobs must be at least 1, got `{jobs}`.")
    try:
        budget = SearchBudget(
            max_states=pick(args.max_states, "get_max_states", C.DEFAULT_MAX_STATES),
            max_moves=pick(args.max_moves, "get_max_moves", C.DEFAULT_MAX_MOVES)
        )
    except ValueError as e:
        raise PotentInputException(str(e))

    return RunConfig(
        command=args.command,
        pattern=_pattern_from_args(args),
        n_values=_n_values_from_args(args),
        min_sum=getattr(args, "min_sum", 0),
        budget=budget,
        jobs=jobs,
        output_format=pick(args.format, "get_output_format", C.DEFAULT_OUTPUT_FORMAT),
        output_path=args.out
    )


def _emit(text: str, run: RunConfig) -> None:
    if run.output_path:
        with open(run.output_path, 'w') as file:
            file.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _read_input_sequences(args: argparse.Namespace) -> list:
    if args.file:
        text = utilities.read_text_file(args.file)
    elif args.sequence:
        text = args.sequence
    else:
        raise PotentInputException("Give a sequence or --file.")
    sequences = read_sequences(text)
    if not sequences:
        raise PotentInputException("No sequences found in the input.")
    return sequences


def _write_witnesses(path: str, graphs: list) -> None:
    with open(path, 'w') as file:
        file.write("\n".join(graph.to_text() for graph in graphs))


def cmd_check(run: RunConfig, args: argparse.Namespace) -> int:
    """Print graphicality and sigma(S) for every input sequence."""

    rows = []
    for S in _read_input_sequences(args):
        rows.append({"sequence": str(S), "graphical": is_graphical(S), "sigma": sigma_sum(S)})
    _emit(format_frame(pd.DataFrame(rows), run.output_format), run)
    return C.EXIT_OK


def cmd_decide(run: RunConfig, args: argparse.Namespace) -> int:
    """Decide potentially or forcibly H-graphic for every input sequence. Any unknown exits 2."""

    decide = is_potentially if run.command == POTENTIALLY else is_forcibly
    rows = []
    witnesses = []
    for S in _read_input_sequences(args):
        decision = decide(S, run.pattern, run.budget)
        rows.append({
            "sequence": str(S),
            "pattern": run.pattern.name,
            run.command: decision.outcome,
            "states": decision.states_visited
        })
        if decision.witness is not None:
            witnesses.append(decision.witness)

    _emit(format_frame(pd.DataFrame(rows), run.output_format), run)
    if args.witness_out:
        _write_witnesses(args.witness_out, witnesses)
    return C.EXIT_UNCERTIFIED if any(row[run.command] == C.UNKNOWN for row in rows) else C.EXIT_OK


def cmd_enumerate(run: RunConfig, args: argparse.Namespace) -> int:
    rows = [
        {"n": n, "sequence": str(S), "sigma": sigma_sum(S)}
        for n in run.n_values
        for S in enumerate_graphical_sequences(n, run.min_sum)
    ]
    _emit(format_frame(pd.DataFrame(rows, columns=["n", "sequence", "sigma"]), run.output_format), run)
    return C.EXIT_OK


def cmd_sigma(run: RunConfig, args: argparse.Namespace) -> int:
    """Run the oracle for every n. A single JSON record prints as one object."""

    records = [sigma_oracle(run.pattern, n, run.budget, run.jobs) for n in run.n_values]
    if run.output_format == C.JSON_FORMAT and len(records) == 1:
        _emit(records[0].to_json(), run)
    else:
        _emit(format_sigma_records(records, run.output_format), run)
    return C.EXIT_OK if all(record.certified for record in records) else C.EXIT_UNCERTIFIED


def cmd_sigma_table(run: RunConfig, args: argparse.Namespace) -> int:
    """Tabulate oracle values against closed forms. A valid formula the oracle disagrees with exits 3."""

    rows = build_sigma_table([run.pattern], run.n_values, run.budget, run.jobs)
    _emit(format_frame(sigma_table_frame(rows), run.output_format), run)
    if any(row.breach for row in rows):
        return C.EXIT_INVARIANT_BREACH
    if not all(row.record.certified for row in rows):
        return C.EXIT_UNCERTIFIED
    return C.EXIT_OK


def cmd_extend(run: RunConfig, args: argparse.Namespace) -> int:
    """Extend the given cycle and print the new graph with its longer cycle."""

    G = SimpleGraph.from_text(utilities.read_text_file(args.graph))
    try:
        on_cycle = CycleWitness(vertices=tuple(utilities.split_integers(utilities.strip_comment(args.on_cycle))))
    except ValueError as e:
        raise PotentInputException(str(e))

    if args.x is not None and args.w is not None:
        ctx = ExtensionContext(G=G, cycle=on_cycle, x=args.x, w=args.w)
    else:
        if not on_cycle.is_valid_in(G):
            raise PotentHypothesisException(f"{on_cycle.vertices} is not a cycle of the graph.")
        ctx = find_extension_context(G, on_cycle)
        if ctx is None:
            raise PotentHypothesisException("No x off the cycle and w on it meet the degree hypotheses.")

    result = extend_cycle(ctx, run.budget)
    cycle_text = " ".join(map(str, result.cycle.vertices))
    if run.output_format == C.JSON_FORMAT:
        text = json.dumps({"strategy": result.strategy, "cycle": list(result.cycle.vertices), "edges": result.graph.edges()})
    else:
        text = f"# strategy: {result.strategy}\n# cycle: {cycle_text}\n{result.graph.to_text()}"
    _emit(text, run)
    if args.witness_out:
        _write_witnesses(args.witness_out, [result.graph])
    return C.EXIT_OK


def cmd_lower_bound(run: RunConfig, args: argparse.Namespace) -> int:
    """Certify the extremal construction for every n. A construction containing the target exits 3."""

    reports = [verify_lower_bound(args.kind, args.m, n, run.budget) for n in run.n_values]
    _emit(format_frame(reports_frame(reports), run.output_format), run)
    if any(report.exhausted and not report.certified for report in reports):
        return C.EXIT_INVARIANT_BREACH
    return C.EXIT_OK if all(report.certified for report in reports) else C.EXIT_UNCERTIFIED


def cmd_hypotheses(run: RunConfig, args: argparse.Namespace) -> int:
    """Survey every sequence for the odd-cycle bound hypotheses. A sequence in scope above the bound exits 3."""

    surveys = [survey_odd_cycle_hypotheses(args.m, n, run.budget) for n in run.n_values]
    _emit(format_frame(reports_frame(surveys), run.output_format), run)
    if any(survey.violations for survey in surveys):
        return C.EXIT_INVARIANT_BREACH
    return C.EXIT_UNCERTIFIED if any(survey.unknown for survey in surveys) else C.EXIT_OK


def cmd_even_bound(run: RunConfig, args: argparse.Namespace) -> int:
    """Check sigma(C_2m+2, 3m + t) against its upper bound for every t. An oracle value above it exits 3."""

    try:
        t_values = utilities.parse_int_range(args.t_range)
    except ValueError as e:
        raise PotentInputException(str(e))
    reports = [check_even_cycle_bound(args.m, t, run.budget, run.jobs) for t in t_values]
    _emit(format_frame(reports_frame(reports), run.output_format), run)
    if any(report.record.certified and not report.within_bound for report in reports):
        return C.EXIT_INVARIANT_BREACH
    return C.EXIT_OK if all(report.record.certified for report in reports) else C.EXIT_UNCERTIFIED


COMMANDS = {
    CHECK: cmd_check,
    POTENTIALLY: cmd_decide,
    FORCIBLY: cmd_decide,
    ENUMERATE: cmd_enumerate,
    SIGMA: cmd_sigma,
    SIGMA_TABLE: cmd_sigma_table,
    EXTEND: cmd_extend,
    LOWER_BOUND: cmd_lower_bound,
    HYPOTHESES: cmd_hypotheses,
    EVEN_BOUND: cmd_even_bound
}


def main(argv: list = None) -> int:
    """
    Run one CLI command.

    Returns:
        int: C.EXIT_OK, C.EXIT_INPUT_ERROR (bad input or unmet hypotheses), C.EXIT_UNCERTIFIED (a budget cut a decision
            short) or C.EXIT_INVARIANT_BREACH (a result contradicts a proven statement).
    """

    args = build_parser().parse_args(argv)
    try:
        configs = _load_configs(args.config)
        _setup_logging(configs)
        run = make_run_config(args, configs)
    except (PotentConfigsException, PotentInputException, PotentGraphException, FileNotFoundError, ValueError) as e:
        print(f"{e}", file=sys.stderr)
        return C.EXIT_INPUT_ERROR

    t0 = dt.datetime.now()
    try:
        status = COMMANDS[run.command](run, args)
    except (
        PotentInputException,
        PotentNotGraphicalException,
        PotentGraphException,
        PotentHypothesisException,
        FileNotFoundError
    ) as e:
        logger.error(f"`{run.command}` failed: {e}")
        print(f"{e}", file=sys.stderr)
        return C.EXIT_INPUT_ERROR
    except PotentContradictionException as e:
        print(f"INVARIANT BREACH: {e}", file=sys.stderr)
        return C.EXIT_INVARIANT_BREACH

    logger.info(f"`{run.command}` exited {status}, completed in {utilities.get_seconds_since_datetime(t0)} seconds.")
    return status
