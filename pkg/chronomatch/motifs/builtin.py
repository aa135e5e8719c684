from __future__ import annotations

import enum
import re
import string
from typing import Callable

from .motif import Motif, MotifParseError, make_motif, reorder_motif

PARAMETRIC = re.compile(r"^(cycle|path)\(?(\d+)\)?$")


class CertEntity(enum.IntEnum):
    """Node types of the insider threat query"""

    employee = 1
    pc = 2
    file = 3
    email = 4


class CertAction(enum.IntEnum):
    """Edge types of the insider threat query"""

    logon = 1
    open = 2
    attach = 3
    send = 4
    logoff = 5


def node_labels(count: int) -> list[str]:
    letters = string.ascii_lowercase
    return [letters[i] if i < len(letters) else f"v{i}" for i in range(count)]


def cycle(k: int) -> Motif:
    """Sequential directed cycle on ``k`` nodes"""
    if k < 1:
        raise MotifParseError("a cycle needs at least one node")
    labels = node_labels(k)
    return make_motif([(labels[i], labels[(i + 1) % k]) for i in range(k)])


def path(k: int) -> Motif:
    """Sequential directed path with ``k`` edges"""
    if k < 1:
        raise MotifParseError("a path needs at least one edge")
    labels = node_labels(k + 1)
    return make_motif([(labels[i], labels[i + 1]) for i in range(k)])


def cert() -> Motif:
    """Insider threat query: an employee logs on a PC, opens a file, attaches
    it to an email, sends the email and logs off"""
    return make_motif(
        [("a", "b"), ("b", "c"), ("c", "d"), ("b", "d"), ("a", "b")],
        node_attrs=dict(
            a=CertEntity.employee,
            b=CertEntity.pc,
            c=CertEntity.file,
            d=CertEntity.email,
        ),
        edge_attrs=[
            CertAction.logon,
            CertAction.open,
            CertAction.attach,
            CertAction.send,
            CertAction.logoff,
        ],
    )


def cert_alt() -> Motif:
    """Insider threat query where the file is opened after being sent"""
    return reorder_motif(cert(), [1, 4, 2, 3, 5])


BUILTIN: dict[str, Callable[[], Motif]] = {
    "m1": lambda: make_motif([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]),
    "m2": lambda: make_motif([("a", "b"), ("b", "c"), ("c", "d")]),
    "m3": lambda: make_motif([("a", "b"), ("b", "c"), ("c", "d"), ("d", "b")]),
    "m4": lambda: make_motif(
        [("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "c")]
    ),
    "m5": lambda: make_motif([("a", "b"), ("b", "c"), ("b", "d"), ("b", "e")]),
    "m6": lambda: make_motif([("a", "b"), ("c", "b"), ("c", "d"), ("e", "d")]),
    "cert": cert,
    "cert-alt": cert_alt,
}
STANDARD_MOTIFS = ("M1", "M2", "M3", "M4", "M5", "M6")


def builtin_motif(name: str) -> Motif:
    """A builtin motif by name

    Names are ``M1`` to ``M6``, ``cert``, ``cert-alt``, ``cycle(k)`` (or
    ``cycleK``) and ``path(k)`` (or ``pathK``), case insensitive.
    """
    key = name.strip().lower()
    if factory := BUILTIN.get(key):
        return factory()
    if match := PARAMETRIC.match(key):
        kind, size = match.groups()
        return cycle(int(size)) if kind == "cycle" else path(int(size))
    raise MotifParseError(f"unknown builtin motif {name!r}")


def builtin_names() -> list[str]:
    return [*STANDARD_MOTIFS, "cert", "cert-alt", "cycle(k)", "path(k)"]
