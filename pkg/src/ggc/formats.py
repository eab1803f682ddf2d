"""Text formats: code-spec files, field matrices and hex-packed words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .code import CodeError, GGCode, WordMatrix
from .galois import FieldCtx, gf_make_ctx
from .gf2 import row_from_hex, row_to_hex
from .polyring import Poly


class SpecError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


@dataclass
class CodeSpec:
    field: FieldCtx
    goppa: Poly
    locators: List[Poly]
    locator_lines: List[int]
    order: str = "canonical"

    def build(self, method: str = "trace") -> GGCode:
        try:
            return GGCode.from_polys(self.locators, self.goppa, self.order, method)
        except CodeError as exc:
            if exc.index is not None:
                raise SpecError(str(exc), self.locator_lines[exc.index]) from exc
            raise


def parse_code_spec(text: str) -> CodeSpec:
    """Parse ``m``, ``G``, ``f`` and ``order`` lines; ``#`` starts a comment."""
    m = None
    G_text = None
    G_line = None
    f_texts: List[Tuple[int, str]] = []
    order = "canonical"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "m":
            if m is not None:
                raise SpecError("duplicate m line", lineno)
            try:
                m = int(rest)
            except ValueError:
                raise SpecError(f"bad extension degree {rest!r}", lineno) from None
        elif key == "G":
            if G_text is not None:
                raise SpecError("duplicate G line", lineno)
            G_text, G_line = rest, lineno
        elif key == "f":
            f_texts.append((lineno, rest))
        elif key == "order":
            if rest not in ("canonical", "given"):
                raise SpecError(f"order must be canonical or given, not {rest!r}", lineno)
            order = rest
        else:
            raise SpecError(f"unknown directive {key!r}", lineno)
    if m is None:
        raise SpecError("missing m line")
    if G_text is None:
        raise SpecError("missing G line")
    if not f_texts:
        raise SpecError("no locators (f lines)")
    try:
        F = gf_make_ctx(m)
    except ValueError as exc:
        raise SpecError(str(exc)) from None

    def poly(lineno: int, s: str) -> Poly:
        try:
            return Poly.from_hex(F, s)
        except ValueError as exc:
            raise SpecError(str(exc), lineno) from None

    return CodeSpec(
        field=F,
        goppa=poly(G_line, G_text),
        locators=[poly(ln, s) for ln, s in f_texts],
        locator_lines=[ln for ln, _ in f_texts],
        order=order,
    )


def dump_code_spec(code: GGCode) -> str:
    lines = [f"m {code.m}", f"G {code.goppa.to_hex()}"]
    lines += [f"f {f.to_hex()}" for f in code.locators.locators]
    lines.append("order given")
    return "\n".join(lines) + "\n"


def dump_field_matrix(H: Sequence[Sequence[int]]) -> str:
    cols = len(H[0]) if H else 0
    out = [f"{len(H)} {cols}"]
    out += [" ".join(format(v, "x") for v in row) for row in H]
    return "\n".join(out) + "\n"


def dump_words(words: Sequence[int], n: int) -> str:
    return "".join(row_to_hex(w, n) + "\n" for w in words)


def load_words(text: str, n: int) -> List[int]:
    return [row_from_hex(ln, n) for ln in text.splitlines() if ln.strip()]


def dump_word_matrix(R: WordMatrix) -> str:
    return f"{R.w} {R.n}\n" + dump_words(R.rows, R.n)


def load_word_matrices(text: str) -> Iterator[WordMatrix]:
    """One or more blocks of ``w n`` header followed by w hex rows."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    i = 0
    while i < len(lines):
        w, n = map(int, lines[i].split())
        block = lines[i + 1 : i + 1 + w]
        if len(block) != w:
            raise ValueError(f"truncated interleaved word: expected {w} rows")
        yield WordMatrix(n, tuple(row_from_hex(b, n) for b in block))
        i += 1 + w
