"""OEIS b-file parsing and prefix comparison.

A b-file is the OEIS plain-text sequence format: one ``index value``
pair per line, ``#``-prefixed comment lines and blank lines skipped,
indices strictly increasing.  Comparison is positional: the n-th
sequence element is checked against the n-th b-file value, so the
b-file's own offset convention does not matter.

Excerpts for the sequences behind the package's frozen fixtures
(A097724, A090181, A033282, A107131) are vendored under
``riordan/data/bfiles`` so comparisons never need network access.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence


class BFileError(ValueError):
    """Malformed b-file line; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"b-file line {lineno}: {message}")


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: (index, value) pairs with increasing indices."""

    entries: tuple[tuple[int, int], ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def parse(cls, text: str) -> "BFile":
        entries: list[tuple[int, int]] = []
        last_index: int | None = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise BFileError(
                    lineno, f"expected 'index value', got {raw.strip()!r}"
                )
            try:
                index, value = int(fields[0]), int(fields[1])
            except ValueError:
                raise BFileError(
                    lineno, f"non-integer field in {raw.strip()!r}"
                ) from None
            if last_index is not None and index <= last_index:
                raise BFileError(
                    lineno,
                    f"index {index} not greater than previous {last_index}",
                )
            last_index = index
            entries.append((index, value))
        return cls(tuple(entries))

    @classmethod
    def load(cls, path: str | Path) -> "BFile":
        return cls.parse(Path(path).read_text(encoding="utf-8"))


def _bfile_dir():
    return resources.files("riordan") / "data" / "bfiles"


def vendored_ids() -> list[str]:
    """Sequence ids with a locally vendored b-file excerpt."""
    return sorted(
        p.name.removesuffix(".txt")
        for p in _bfile_dir().iterdir()
        if p.name.endswith(".txt")
    )


def load_vendored(seq_id: str) -> BFile:
    """Load a vendored excerpt by sequence id, e.g. ``A097724``."""
    res = _bfile_dir() / f"{seq_id}.txt"
    if not res.is_file():
        raise FileNotFoundError(
            f"no vendored b-file for {seq_id!r}; have {vendored_ids()}"
        )
    return BFile.parse(res.read_text(encoding="utf-8"))


@dataclass(frozen=True)
class CompareReport:
    """Outcome of a positional prefix comparison."""

    match_length: int
    compared: int
    mismatch_index: int | None
    expected: int | None
    got: int | None
    min_match: int

    @property
    def passed(self) -> bool:
        return self.mismatch_index is None and self.match_length >= self.min_match

    def summary(self) -> str:
        if self.passed:
            return (
                f"PASS: first {self.match_length} terms match "
                f"(threshold {self.min_match})"
            )
        if self.mismatch_index is not None:
            return (
                f"FAIL: mismatch at position {self.mismatch_index}: "
                f"expected {self.expected}, got {self.got} "
                f"(matched {self.match_length} before it)"
            )
        return (
            f"FAIL: only {self.match_length} matching terms, "
            f"need {self.min_match}"
        )


def compare(
    seq: Iterable[int], bfile: BFile, min_match: int = 1
) -> CompareReport:
    """Compare a sequence against a b-file, position by position.

    The longest matching prefix is reported; a mismatch anywhere in
    the overlap fails regardless of the threshold, and a clean overlap
    shorter than ``min_match`` also fails.
    """
    values = bfile.values
    seq = list(seq)
    overlap = min(len(seq), len(values))
    for i in range(overlap):
        if seq[i] != values[i]:
            return CompareReport(
                match_length=i,
                compared=overlap,
                mismatch_index=i,
                expected=values[i],
                got=seq[i],
                min_match=min_match,
            )
    return CompareReport(
        match_length=overlap,
        compared=overlap,
        mismatch_index=None,
        expected=None,
        got=None,
        min_match=min_match,
    )


def series_integers(coeffs: Sequence) -> list[int]:
    """Exact integer view of rational coefficients (error if non-integer)."""
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError(f"non-integer coefficient {c}")
        out.append(int(c))
    return out
