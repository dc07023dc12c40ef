"""
Text forms of group descriptors.

The ASCII grammar (case-insensitive on family letters)::

    Z<int> | D<int> | A4 | S4 | A5
    Z<int>xZ<int> | (Z<int>xZ<int>):Z2 | Z<int>xD<int> | D<int>xD<int>

is used both for parsing and for display, so ``parse_group(display_name(g)) == g``
for every canonical ``g``. ``pretty_name`` renders the typeset variant used in
markdown output.
"""
import string

from src.errors import GroupSyntaxError
from src.groups.descriptors import (Family, GroupDescriptor, PolyhedralKind,
                                    canonicalize)

_SUBSCRIPTS = str.maketrans(string.digits, "₀₁₂₃₄₅₆₇₈₉")


def display_name(g: GroupDescriptor) -> str:
    family = g.family
    if family == Family.TRIVIAL:
        return "Z1"
    if family == Family.POLYHEDRAL:
        return g.kind.name
    if family == Family.CYCLIC:
        return f"Z{g.m}"
    if family == Family.DIHEDRAL:
        return f"D{g.m}"
    r, s = g.params
    if family == Family.ZXZ:
        return f"Z{r}xZ{s}"
    if family == Family.ZXZ_SEMI_Z2:
        return f"(Z{r}xZ{s}):Z2"
    if family == Family.ZXD:
        return f"Z{r}xD{s}"
    return f"D{r}xD{s}"


def pretty_name(g: GroupDescriptor) -> str:
    def sub(value):
        return str(value).translate(_SUBSCRIPTS)

    family = g.family
    if family == Family.TRIVIAL:
        return "ℤ₁"
    if family == Family.POLYHEDRAL:
        return g.kind.name[0] + sub(g.kind.name[1:])
    if family == Family.CYCLIC:
        return f"ℤ{sub(g.m)}"
    if family == Family.DIHEDRAL:
        return f"D{sub(g.m)}"
    r, s = (sub(p) for p in g.params)
    if family == Family.ZXZ:
        return f"ℤ{r} × ℤ{s}"
    if family == Family.ZXZ_SEMI_Z2:
        return f"(ℤ{r} × ℤ{s}) ⋊ ℤ₂"
    if family == Family.ZXD:
        return f"ℤ{r} × D{s}"
    return f"D{r} × D{s}"


class _Scanner(object):
    def __init__(self, text):
        self.text = text
        self.pos = len(text) - len(text.lstrip())
        self.end = len(text.rstrip())

    def at_end(self):
        return self.pos >= self.end

    def peek(self):
        return "" if self.at_end() else self.text[self.pos].upper()

    def fail(self, expected, position=None):
        raise GroupSyntaxError(self.text, self.pos if position is None else position, expected)

    def expect(self, literal):
        if self.text[self.pos:self.pos + len(literal)].upper() != literal.upper():
            self.fail(repr(literal))
        self.pos += len(literal)

    def integer(self):
        start = self.pos
        while not self.at_end() and self.text[self.pos] in string.digits:
            self.pos += 1
        if start == self.pos:
            self.fail("an integer")
        return int(self.text[start:self.pos])

    def factor(self):
        """Reads Z<int> or D<int>; returns (letter, value, position)."""
        start = self.pos
        letter = self.peek()
        if letter not in ("Z", "D"):
            self.fail("'Z' or 'D'")
        self.pos += 1
        return letter, self.integer(), start

    def finish(self):
        if not self.at_end():
            self.fail("end of input")


def _parse_structure(scanner: _Scanner) -> GroupDescriptor:
    if scanner.at_end():
        scanner.fail("a group name")

    if scanner.peek() == "(":
        scanner.expect("(")
        left, r, left_pos = scanner.factor()
        scanner.expect("x")
        right, s, right_pos = scanner.factor()
        scanner.expect(")")
        scanner.expect(":")
        scanner.expect("Z2")
        scanner.finish()
        if left != "Z":
            scanner.fail("'Z'", left_pos)
        if right != "Z":
            scanner.fail("'Z'", right_pos)
        return GroupDescriptor.zxz_semi_z2(r, s)

    head = scanner.text[scanner.pos:scanner.pos + 2].upper()
    if head in PolyhedralKind.__members__:
        scanner.pos += 2
        scanner.finish()
        return GroupDescriptor.polyhedral(PolyhedralKind[head])

    left, r, _ = scanner.factor()
    if scanner.at_end():
        if left == "Z":
            return GroupDescriptor.cyclic(r)
        return GroupDescriptor.dihedral(r)

    scanner.expect("x")
    right, s, _ = scanner.factor()
    scanner.finish()
    if (left, right) == ("Z", "Z"):
        return GroupDescriptor.zxz(r, s)
    if (left, right) == ("Z", "D"):
        return GroupDescriptor.zxd(r, s)
    if (left, right) == ("D", "Z"):
        return GroupDescriptor.zxd(s, r)
    return GroupDescriptor.dxd(r, s)


def parse_group(text: str) -> GroupDescriptor:
    """Parses a group name and returns its canonical descriptor.

    Raises GroupSyntaxError (with the failing position) on malformed text and
    OutOfUniverseError on names outside the supported families, e.g. Z4xZ6."""
    return canonicalize(_parse_structure(_Scanner(text)))
