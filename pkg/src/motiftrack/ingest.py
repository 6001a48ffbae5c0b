"""System-call trace ingestion: strace-style logs to an integer series.

Traces captured with ``strace -ff -o prefix`` produce one file per PID with
one call per line.  Parsing keeps only the call name before the first '(';
signal deliveries, resumption markers, exit notes and other noise are
skipped but counted.  An unfinished/resumed pair counts once, at the
unfinished line, which preserves ordering by call initiation time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib.resources import files

import numpy as np

from .series import TimeSeries

_CALL_LINE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\(")

DEFAULT_SYSCALL_TABLE = "syscalls-linux-2.4-i386.txt"


@dataclass(frozen=True)
class SyscallMap:
    """Unique syscall names mapped to unique non-negative ids."""

    entries: dict[str, int]


@dataclass(frozen=True)
class PidTrace:
    pid: int
    calls: tuple[str, ...]


def parse_strace_text(text: str) -> tuple[list[str], int, int]:
    """Extract call names in order.

    Returns (calls, line_count, skipped_count).  skipped counts every line
    with no recognizable call initiation: blanks, '--- SIGxxx ---' signal
    lines, '<... name resumed>' markers, '+++ exited ...' lines, comments.
    """
    calls: list[str] = []
    skipped = 0
    total = 0
    for line in text.splitlines():
        total += 1
        match = _CALL_LINE.match(line)
        if match:
            calls.append(match.group(1))
        else:
            skipped += 1
    return calls, total, skipped


def parse_strace_file(path) -> tuple[PidTrace, int, int]:
    """Parse one per-PID trace file named <prefix>.<pid>."""
    path_str = str(path)
    suffix = path_str.rsplit(".", 1)[-1]
    if not suffix.isdigit():
        raise ValueError(f"trace file name must end in .<pid>: {path_str!r}")
    with open(path, "r", encoding="utf-8", errors="replace") as fh:
        calls, total, skipped = parse_strace_text(fh.read())
    return PidTrace(int(suffix), tuple(calls)), total, skipped


def load_syscall_map_text(text: str) -> SyscallMap:
    """Parse a 'name id' table, one entry per line, '#' comments allowed.

    Duplicate names and duplicate ids are both rejected: motif semantics
    depend only on id equality, and a silently shared id would merge calls.
    """
    entries: dict[str, int] = {}
    seen_ids: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'name id', got {raw.strip()!r}")
        name, id_text = parts
        try:
            call_id = int(id_text)
        except ValueError:
            raise ValueError(f"line {lineno}: id for {name!r} is not an integer") from None
        if call_id < 0:
            raise ValueError(f"line {lineno}: id for {name!r} is negative")
        if name in entries:
            raise ValueError(f"line {lineno}: duplicate syscall name {name!r}")
        if call_id in seen_ids:
            raise ValueError(
                f"line {lineno}: id {call_id} already assigned to {seen_ids[call_id]!r}"
            )
        entries[name] = call_id
        seen_ids[call_id] = name
    return SyscallMap(entries)


def load_syscall_map(path) -> SyscallMap:
    with open(path, "r", encoding="utf-8") as fh:
        return load_syscall_map_text(fh.read())


def default_syscall_map() -> SyscallMap:
    """The bundled reference table (Linux 2.4 series, i386)."""
    text = files("motiftrack").joinpath(f"data/{DEFAULT_SYSCALL_TABLE}").read_text("utf-8")
    return load_syscall_map_text(text)


def concatenate_pid_traces(parent: PidTrace, children) -> list[str]:
    """Parent calls first, then each child's calls in ascending-PID order."""
    seen = {parent.pid}
    ordered = sorted(children, key=lambda t: t.pid)
    for child in ordered:
        if child.pid in seen:
            raise ValueError(f"duplicate pid {child.pid}")
        seen.add(child.pid)
    out = list(parent.calls)
    for child in ordered:
        out.extend(child.calls)
    return out


def encode_series(calls, syscall_map: SyscallMap, strict: bool = False) -> tuple[TimeSeries, int]:
    """Map call names to ids in order; returns (series, dropped_count).

    With strict=True an unknown name raises, naming the call and its
    position; otherwise unknown names are dropped and counted.
    """
    ids: list[int] = []
    dropped = 0
    for pos, name in enumerate(calls):
        try:
            ids.append(syscall_map.entries[name])
        except KeyError:
            if strict:
                raise ValueError(f"unknown syscall {name!r} at position {pos}") from None
            dropped += 1
    if not ids:
        raise ValueError("empty input")
    return TimeSeries(np.array(ids, dtype=np.float64)), dropped
