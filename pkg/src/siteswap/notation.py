"""Text notation for throw sequences.

Two forms are accepted. Compact form spells one throw per character, digits
for 0-9 and letters for 10-35 (``a`` = 10, case-insensitive). List form is
comma-separated decimals and has no height limit. A comma anywhere in the
input selects list form.
"""

import enum
import string

from .errors import ParseError, RepresentabilityError
from .pattern import ThrowSequence

__all__ = ["NotationForm", "canonicalize", "detect_form", "parse", "render", "render_auto"]

COMPACT_MAX = 35
_DIGITS = string.digits + string.ascii_lowercase


class NotationForm(enum.Enum):
    COMPACT = "compact"
    LIST = "list"


def detect_form(text):
    return NotationForm.LIST if "," in text else NotationForm.COMPACT


def _strip_bounds(text):
    start = 0
    end = len(text)
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return start, end


def _byte_offset(text, index):
    return len(text[:index].encode("utf-8"))


def _parse_compact(text, start, end):
    heights = []
    for i in range(start, end):
        ch = text[i]
        if "0" <= ch <= "9":
            heights.append(ord(ch) - ord("0"))
        elif ch.isascii() and ch.isalpha():
            heights.append(10 + ord(ch.lower()) - ord("a"))
        else:
            raise ParseError(f"unknown character {ch!r}", _byte_offset(text, i))
    return heights


def _parse_list(text, start, end):
    heights = []
    pos = start
    while True:
        stop = text.find(",", pos, end)
        if stop < 0:
            stop = end
        tok_start, tok_end = pos, stop
        while tok_start < tok_end and text[tok_start].isspace():
            tok_start += 1
        while tok_end > tok_start and text[tok_end - 1].isspace():
            tok_end -= 1
        token = text[tok_start:tok_end]
        offset = _byte_offset(text, tok_start)
        if not token:
            raise ParseError("empty token", offset)
        if token[0] == "-" and token[1:].isascii() and token[1:].isdigit():
            raise ParseError(f"negative number {token!r}", offset)
        for j, ch in enumerate(token):
            if not ("0" <= ch <= "9"):
                raise ParseError(f"unknown character {ch!r}", _byte_offset(text, tok_start + j))
        heights.append(int(token))
        if stop == end:
            return heights
        pos = stop + 1


def parse(text):
    """Parse notation text into a ThrowSequence; validity is not checked."""
    start, end = _strip_bounds(text)
    if start == end:
        raise ParseError("empty input", _byte_offset(text, start))
    if detect_form(text) is NotationForm.LIST:
        heights = _parse_list(text, start, end)
    else:
        heights = _parse_compact(text, start, end)
    return ThrowSequence(tuple(heights))


def render(seq, form=NotationForm.COMPACT):
    heights = seq.heights if hasattr(seq, "heights") else tuple(seq)
    form = NotationForm(form)
    if form is NotationForm.LIST and len(heights) > 1:
        return ",".join(str(h) for h in heights)
    # Without a comma the text reads back as compact, so a single throw is
    # spelled compactly in either form.
    for i, h in enumerate(heights):
        if h > COMPACT_MAX:
            raise RepresentabilityError(
                f"height {h} at position {i} exceeds {COMPACT_MAX}; use list form"
            )
    return "".join(_DIGITS[h] for h in heights)


def render_auto(seq):
    """Compact form when every height fits, list form otherwise.

    A single throw above 35 has no spelling in the grammar; it is shown as
    its decimal value, which is for display only and parses differently.
    """
    heights = seq.heights if hasattr(seq, "heights") else tuple(seq)
    if all(h <= COMPACT_MAX for h in heights):
        return render(heights, NotationForm.COMPACT)
    if len(heights) == 1:
        return str(heights[0])
    return render(heights, NotationForm.LIST)


def canonicalize(text):
    """Re-render ``text`` in its own form: lowercase, no stray whitespace."""
    return render(parse(text), detect_form(text))
