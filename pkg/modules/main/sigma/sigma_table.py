from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Optional
import pandas as pd
import modules.main.util.constants as C
from modules.main.degseq.degree_sequence import PotentInputException
from modules.main.sigma.formulas import FormulaValue, closed_form
from modules.main.sigma.sigma_oracle import SigmaRecord, sigma_oracle
from modules.main.switchspace.realization_space import SearchBudget


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SigmaTableRow:
    """An oracle record next to the closed form for the same (H, n)."""

    record: SigmaRecord
    formula: Optional[FormulaValue]

    @property
    def match(self) -> bool:
        return self.formula is not None and self.record.sigma == self.formula.value

    @property
    def breach(self) -> bool:
        """A certified oracle value that disagrees with a formula flagged valid."""
        return self.formula is not None and self.formula.valid and self.record.certified and not self.match

    def to_dict(self) -> dict:
        record = self.record
        return {
            C.TABLE_PATTERN_KEY: record.pattern.name,
            C.TABLE_N_KEY: record.n,
            C.TABLE_ORACLE_KEY: C.IMPOSSIBLE if record.impossible else record.sigma,
            C.TABLE_FORMULA_KEY: self.formula.value if self.formula else None,
            C.TABLE_VALID_KEY: self.formula.valid if self.formula else False,
            C.TABLE_MATCH_KEY: self.match,
            C.TABLE_CERTIFIED_KEY: record.certified,
            C.TABLE_SOURCE_KEY: self.formula.source if self.formula else None
        }


def build_sigma_table(patterns: list, n_values, budget: SearchBudget = SearchBudget(), jobs: int = 1) -> list:
    """
    Run the oracle for every pattern and n and line each record up with its closed form.

    Args:
        patterns (list): The PatternGraphs.
        n_values (iterable): The sequence lengths.
        budget (SearchBudget): The caps for each decision.
        jobs (int): Worker processes for the oracle.

    Returns:
        list: SigmaTableRows, pattern-major.
    """

    rows = []
    for H in patterns:
        for n in n_values:
            record = sigma_oracle(H, n, budget, jobs)
            formula = closed_form(H, n) if not record.impossible else None
            row = SigmaTableRow(record=record, formula=formula)
            if row.breach:
                logger.warning(f"sigma({H.name}, {n}) = {record.sigma} but {formula.source} gives {formula.value}.")
            rows.append(row)
    return rows


def sigma_table_frame(rows: list) -> pd.DataFrame:
    return pd.DataFrame([row.to_dict() for row in rows], columns=[
        C.TABLE_PATTERN_KEY,
        C.TABLE_N_KEY,
        C.TABLE_ORACLE_KEY,
        C.TABLE_FORMULA_KEY,
        C.TABLE_VALID_KEY,
        C.TABLE_MATCH_KEY,
        C.TABLE_CERTIFIED_KEY,
        C.TABLE_SOURCE_KEY
    ])


def format_frame(frame: pd.DataFrame, output_format: str) -> str:
    """Emit a DataFrame as JSON records, CSV or a text table."""

    if output_format == C.JSON_FORMAT:
        return frame.to_json(orient="records")
    if output_format == C.CSV_FORMAT:
        return frame.to_csv(index=False)
    if output_format == C.TEXT_FORMAT:
        return frame.to_markdown(index=False)
    raise PotentInputException(f"Output format must be one of {C.OUTPUT_FORMATS}, got `{output_format}`.")
