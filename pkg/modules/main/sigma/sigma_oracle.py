from __future__ import annotations
import datetime as dt
import io
import json
import logging
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, Optional
import pandas as pd
import modules.main.util.constants as C
import modules.main.util.utilities as utilities
from modules.main.degseq.degree_sequence import (
    DegreeSequence,
    PotentInputException,
    graphical_sequences_by_sum,
    sigma_sum,
)
from modules.main.graph.patterns import PatternGraph, parse_pattern, pattern_fits_order
from modules.main.switchspace.realization_space import SearchBudget, is_potentially


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SigmaRecord:
    """
    The oracle's answer for one (H, n).

    Attributes:
        pattern (PatternGraph): The target subgraph H.
        n (int): The sequence length.
        sigma (int): The even threshold sigma(H, n), or None when H can't fit in n vertices.
        witness (DegreeSequence): A graphical sequence with sum sigma - 2 that isn't potentially H-graphic. None when
            sigma is 0 or impossible.
        sequences_checked (int): Decisions made before the witness was found.
        unknown_count (int): Decisions cut off by the search budget. A record with unknowns isn't certified.
    """

    pattern: PatternGraph
    n: int
    sigma: Optional[int]
    witness: Optional[DegreeSequence]
    sequences_checked: int
    unknown_count: int

    @property
    def impossible(self) -> bool:
        return self.sigma is None

    @property
    def certified(self) -> bool:
        return self.unknown_count == 0

    def to_dict(self) -> dict:
        return {
            C.PATTERN_KEY: self.pattern.name,
            C.N_KEY: self.n,
            C.SIGMA_KEY: C.IMPOSSIBLE if self.impossible else self.sigma,
            C.WITNESS_KEY: list(self.witness.terms) if self.witness is not None else None,
            C.SEQUENCES_CHECKED_KEY: self.sequences_checked,
            C.UNKNOWN_KEY: self.unknown_count
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @staticmethod
    def from_dict(data: dict) -> SigmaRecord:
        """
        Build a record from its JSON or CSV row form.

        Throws PotentInputException if a column is missing or malformed.
        """

        try:
            sigma = data[C.SIGMA_KEY]
            witness = utilities.get(data, C.WITNESS_KEY)
            if isinstance(witness, str):
                witness = utilities.split_integers(witness) if witness.strip() else None
            return SigmaRecord(
                pattern=parse_pattern(str(data[C.PATTERN_KEY])),
                n=int(data[C.N_KEY]),
                sigma=None if str(sigma) == C.IMPOSSIBLE else int(sigma),
                witness=DegreeSequence(terms=tuple(int(term) for term in witness)) if witness is not None else None,
                sequences_checked=int(data[C.SEQUENCES_CHECKED_KEY]),
                unknown_count=int(data[C.UNKNOWN_KEY])
            )
        except KeyError as e:
            raise PotentInputException(f"Sigma record is missing the `{e.args[0]}` column.")
        except ValueError as e:
            raise PotentInputException(f"Malformed sigma record {data}: {e}")


def _decide_task(task: tuple) -> str:
    """Worker entry point: decide one potentially-H question from picklable parts."""
    terms, kind, size, max_states, max_moves = task
    decision = is_potentially(
        DegreeSequence(terms=terms),
        PatternGraph(kind=kind, size=size),
        SearchBudget(max_states=max_states, max_moves=max_moves)
    )
    return decision.outcome


def _level_outcomes(level: list, H: PatternGraph, budget: SearchBudget, pool) -> Iterator[str]:
    """Yield the potentially-H outcome of every sequence in a sum level, in level order."""

    if pool is None:
        for S in level:
            yield is_potentially(S, H, budget).outcome
        return
    tasks = [(S.terms, H.kind, H.size, budget.max_states, budget.max_moves) for S in level]
    yield from pool.imap(_decide_task, tasks)


def sigma_oracle(H: PatternGraph, n: int, budget: SearchBudget = SearchBudget(), jobs: int = 1) -> SigmaRecord:
    """
    Compute sigma(H, n) by brute force: the largest sum M of a graphical n-term sequence that isn't potentially
    H-graphic, plus 2.

    Sum levels are scanned highest first and the scan stops at the first level holding a non-potentially sequence; that
    sequence (the first in enumeration order) is the witness. Counts stop at the witness, so the record doesn't depend
    on `jobs`.

    Args:
        H (PatternGraph): The target subgraph.
        n (int): The sequence length. Must be at least 1.
        budget (SearchBudget): The caps for each potentially-H decision.
        jobs (int): Worker processes. 1 decides in this process.

    Returns:
        SigmaRecord: The threshold and its witness. Budget-limited decisions are counted in `unknown_count` and make the
            record uncertified.
    """

    if n < 1:
        raise PotentInputException(f"Sequence length must be at least 1, got `{n}`.")
    if jobs < 1:
        raise PotentInputException(f"Worker count must be at least 1, got `{jobs}`.")
    if not pattern_fits_order(H, n):
        logger.info(f"{H.name} can't fit in {n} vertices.")
        return SigmaRecord(pattern=H, n=n, sigma=None, witness=None, sequences_checked=0, unknown_count=0)

    t0 = dt.datetime.now()
    logger.info(f"Computing sigma({H.name}, {n}) with {jobs} worker(s)...")
    checked = 0
    unknown = 0
    witness = None

    pool = Pool(processes=jobs) if jobs > 1 else None
    try:
        for level_sum, level in graphical_sequences_by_sum(n):
            for S, outcome in zip(level, _level_outcomes(level, H, budget, pool)):
                checked += 1
                if outcome == C.UNKNOWN:
                    unknown += 1
                elif outcome == C.NO:
                    witness = S
                    break
            logger.debug(f"Sum level {level_sum} of sigma({H.name}, {n}) done, {checked} checked so far.")
            if witness is not None:
                break
    finally:
        if pool is not None:
            pool.terminate()

    sigma = sigma_sum(witness) + 2 if witness is not None else 0
    if unknown:
        logger.warning(f"sigma({H.name}, {n}) = {sigma} is uncertified: {unknown} decision(s) hit the search budget.")
    logger.info(f"sigma({H.name}, {n}) = {sigma} completed in {utilities.get_seconds_since_datetime(t0)} seconds.")
    return SigmaRecord(pattern=H, n=n, sigma=sigma, witness=witness, sequences_checked=checked, unknown_count=unknown)


def sigma_records_frame(records: list) -> pd.DataFrame:
    """Build a DataFrame of records, one row per record. Witnesses become space-separated terms."""

    rows = []
    for record in records:
        row = record.to_dict()
        if row[C.WITNESS_KEY] is not None:
            row[C.WITNESS_KEY] = " ".join(map(str, row[C.WITNESS_KEY]))
        rows.append(row)
    return pd.DataFrame(rows, columns=C.SIGMA_RECORD_COLUMN_NAMES)


def format_sigma_records(records: list, output_format: str) -> str:
    """
    Emit records as JSON (one object per record, in a list), CSV or a text table.

    Throws PotentInputException on an unknown format.
    """

    if output_format == C.JSON_FORMAT:
        return json.dumps([record.to_dict() for record in records])
    if output_format == C.CSV_FORMAT:
        return sigma_records_frame(records).to_csv(index=False)
    if output_format == C.TEXT_FORMAT:
        return sigma_records_frame(records).to_markdown(index=False)
    raise PotentInputException(f"Output format must be one of {C.OUTPUT_FORMATS}, got `{output_format}`.")


def read_sigma_records(text: str, input_format: str) -> list:
    """
    Read records written by `format_sigma_records` (or a single JSON record object).

    Throws PotentInputException on malformed input or an unreadable format.
    """

    if input_format == C.JSON_FORMAT:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PotentInputException(f"Malformed sigma record JSON: {e}")
        rows = data if isinstance(data, list) else [data]
    elif input_format == C.CSV_FORMAT:
        frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
        rows = frame.to_dict(orient="records")
    else:
        raise PotentInputException(f"Sigma records can be read from {C.JSON_FORMAT} or {C.CSV_FORMAT}, not `{input_format}`.")
    return [SigmaRecord.from_dict(row) for row in rows]
