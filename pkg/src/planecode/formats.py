"""Text file formats and JSON records.

Plane files:   "plane n=<n> points=<N> lines=<N>" then one line of sorted
               0-based point indices per geometric line.
PLS files:     "pls points=<N> lines=<M>" then one line per structure line.
Word files:    "word p=<p> len=<L>" then "pos:value" pairs for the support,
               sorted by position; a JSON mirror is provided for tooling.

Exporters and ingesters are exact inverses on the textual relation; all
machine output elsewhere is JSON.
"""

from __future__ import annotations

import hashlib
import json
import time
from pathlib import Path

import numpy as np

from .antipodal import PartialLinearSpace
from .codes import CodeWord
from .geometry import Plane, plane_from_incidence


class FormatError(ValueError):
    pass


# -- planes ----------------------------------------------------------------------


def plane_to_text(plane: Plane) -> str:
    head = f"plane n={plane.order} points={plane.npoints} lines={plane.npoints}"
    body = "\n".join(" ".join(str(p) for p in l) for l in plane.lines)
    return head + "\n" + body + "\n"


def plane_from_text(text: str) -> Plane:
    lines = [l for l in text.splitlines() if l.strip()]
    head = lines[0].split()
    if not head or head[0] != "plane":
        raise FormatError("missing 'plane' header")
    fields = dict(kv.split("=") for kv in head[1:])
    n = int(fields["n"])
    rows = [[int(x) for x in l.split()] for l in lines[1:]]
    if len(rows) != int(fields["lines"]):
        raise FormatError(
            f"header says {fields['lines']} lines, file has {len(rows)}"
        )
    return plane_from_incidence(rows, n)


def write_plane(plane: Plane, path) -> None:
    Path(path).write_text(plane_to_text(plane))


def read_plane(path) -> Plane:
    return plane_from_text(Path(path).read_text())


# -- partial linear spaces ---------------------------------------------------------


def pls_to_text(pls: PartialLinearSpace) -> str:
    head = f"pls points={pls.n_points} lines={len(pls.lines)}"
    body = "\n".join(" ".join(str(p) for p in l) for l in pls.lines)
    return head + "\n" + body + "\n"


def pls_from_text(text: str) -> PartialLinearSpace:
    lines = [l for l in text.splitlines() if l.strip()]
    head = lines[0].split()
    if not head or head[0] != "pls":
        raise FormatError("missing 'pls' header")
    fields = dict(kv.split("=") for kv in head[1:])
    rows = [tuple(int(x) for x in l.split()) for l in lines[1:]]
    if len(rows) != int(fields["lines"]):
        raise FormatError(f"header says {fields['lines']} lines, file has {len(rows)}")
    return PartialLinearSpace(int(fields["points"]), rows)


def write_pls(pls: PartialLinearSpace, path) -> None:
    Path(path).write_text(pls_to_text(pls))


def read_pls(path) -> PartialLinearSpace:
    return pls_from_text(Path(path).read_text())


# -- code words --------------------------------------------------------------------


def word_to_text(w: CodeWord) -> str:
    head = f"word p={w.p} len={w.length}"
    body = "\n".join(f"{int(i)}:{int(w.values[i])}" for i in w.support)
    return head + ("\n" + body if body else "") + "\n"


def word_from_text(text: str) -> CodeWord:
    lines = [l for l in text.splitlines() if l.strip()]
    head = lines[0].split()
    if not head or head[0] != "word":
        raise FormatError("missing 'word' header")
    fields = dict(kv.split("=") for kv in head[1:])
    p, length = int(fields["p"]), int(fields["len"])
    values = np.zeros(length, dtype=np.int64)
    for entry in lines[1:]:
        pos, val = entry.split(":")
        values[int(pos)] = int(val)
    return CodeWord(p, values)


def word_to_json(w: CodeWord) -> dict:
    return {
        "p": w.p,
        "len": w.length,
        "support": {str(int(i)): int(w.values[i]) for i in w.support},
    }


def word_from_json(obj: dict) -> CodeWord:
    values = np.zeros(int(obj["len"]), dtype=np.int64)
    for pos, val in obj["support"].items():
        values[int(pos)] = int(val)
    return CodeWord(int(obj["p"]), values)


def write_word(w: CodeWord, path) -> None:
    Path(path).write_text(word_to_text(w))


def read_word(path) -> CodeWord:
    return word_from_text(Path(path).read_text())


# -- run records -------------------------------------------------------------------


def file_sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def run_record(command: str, config: dict, inputs: dict, outcome: dict) -> dict:
    """A self-contained record of one CLI invocation."""
    import planecode

    return {
        "command": command,
        "config": config,
        "versions": {
            "planecode": planecode.__version__,
            "numpy": np.__version__,
        },
        "input_hashes": {
            name: file_sha256(path) for name, path in inputs.items() if Path(path).exists()
        },
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        "outcome": outcome,
    }


def dump_record(record: dict, out: str | None) -> str:
    text = json.dumps(record, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    return text
