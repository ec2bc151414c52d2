"""Structured reports: nested dicts/lists with exact rationals as "p/q" strings.

Two serializations are supported.  JSON keeps the tree as is.  TSV writes one
``path<TAB>json-value`` line per leaf.  Paths start at ``$`` and join
segments with ``/``; list indices are written as ``#0``, ``#1``, ... so that
lists and dicts are told apart on the way back.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any


def plain(x: Any) -> Any:
    """Convert a report value to JSON-ready data (rationals become strings)."""
    if isinstance(x, bool) or x is None or isinstance(x, (str, int)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    if hasattr(x, "as_dict"):
        return plain(x.as_dict())
    if hasattr(x, "__str__") and type(x).__str__ is not object.__str__:
        return str(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps_json(tree: Any) -> str:
    return json.dumps(plain(tree), indent=2, ensure_ascii=False) + "\n"


def loads_json(text: str) -> Any:
    return json.loads(text)


_ESC = {"%": "%25", "/": "%2F", "\t": "%09", "\n": "%0A", "\r": "%0D", "#": "%23"}


def _esc(seg: str) -> str:
    return "".join(_ESC.get(c, c) for c in seg)


def _unesc(seg: str) -> str:
    return re.sub(r"%([0-9A-F]{2})", lambda m: chr(int(m.group(1), 16)), seg)


def _leaves(x: Any, path: list[str]):
    if isinstance(x, dict) and x:
        for k, v in x.items():
            yield from _leaves(v, path + [_esc(k)])
    elif isinstance(x, list) and x:
        for i, v in enumerate(x):
            yield from _leaves(v, path + [f"#{i}"])
    else:
        yield "/".join(path), x


def dumps_tsv(tree: Any) -> str:
    lines = []
    for p, v in _leaves(plain(tree), ["$"]):
        lines.append(f"{p}\t{json.dumps(v, ensure_ascii=False)}")
    return "\n".join(lines) + "\n"


def loads_tsv(text: str) -> Any:
    root: Any = None
    for line in text.split("\n"):
        if not line:
            continue
        p, _, v = line.partition("\t")
        value = json.loads(v)
        head, *segs = p.split("/")
        if head != "$":
            raise ValueError(f"bad report path {p!r}")
        if not segs:
            return value
        if root is None:
            root = [] if segs[0].startswith("#") else {}
        cur = root
        for seg, nxt in zip(segs, segs[1:] + [None]):
            key: Any = int(seg[1:]) if seg.startswith("#") else _unesc(seg)
            if nxt is None:
                child = value
            else:
                child = [] if nxt.startswith("#") else {}
            if isinstance(cur, list):
                if key == len(cur):
                    cur.append(child)
                cur = cur[key]
            else:
                cur = cur.setdefault(key, child)
    return root


def dumps(tree: Any, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps_json(tree)
    if fmt == "tsv":
        return dumps_tsv(tree)
    raise ValueError(f"unknown format {fmt!r}")


def loads(text: str, fmt: str = "json") -> Any:
    return loads_json(text) if fmt == "json" else loads_tsv(text)
