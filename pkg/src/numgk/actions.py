"""Exact matrices of autoequivalence actions on numerical Grothendieck groups.

Convention: the stored matrix lists basis images as rows (row i is the image
of basis vector i), matching the standard way these actions are written out
for bielliptic surfaces. A word [g1, g2, ..., gm] denotes the composition
g1 o g2 o ... o gm (rightmost applied first) and its matrix is the product
M(g1) * M(g2) * ... * M(gm). Spectra and spectral radii are invariant under
transposition, so every certified radius is convention-independent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .matrices import Matrix, block_diagonal
from .surfaces import SurfaceKind, SurfaceModel


class Tag(str, Enum):
    TENSOR_LINE_BUNDLE = "tensor_line_bundle"
    SHIFT = "shift"
    RELATIVE_FM_POTTER = "relative_fm_potter"
    SPHERICAL_TWIST_O = "spherical_twist_o"
    TENSOR_MINUS_H_K3 = "tensor_minus_h_k3"
    LIFT_BLOCK = "lift_block"


@dataclass(frozen=True)
class GeneratorToken:
    tag: Tag
    a: int = 0
    b: int = 0
    base_word: tuple["GeneratorToken", ...] = ()
    k_block: Matrix | None = None
    inverted: bool = False

    def label(self) -> str:
        if self.tag == Tag.TENSOR_LINE_BUNDLE:
            body = f"tensor({self.a},{self.b})"
        elif self.tag == Tag.SHIFT:
            body = "shift"
        elif self.tag == Tag.RELATIVE_FM_POTTER:
            body = "fm_p"
        elif self.tag == Tag.SPHERICAL_TWIST_O:
            body = "twistO"
        elif self.tag == Tag.TENSOR_MINUS_H_K3:
            body = "tensorHK3(-1)"
        else:
            inner = ";".join(t.label() for t in self.base_word)
            body = f"lift[{inner}]"
        return body + ("^-1" if self.inverted else "")


def tensor_token(a: int, b: int) -> GeneratorToken:
    return GeneratorToken(Tag.TENSOR_LINE_BUNDLE, a=a, b=b)


def shift_token() -> GeneratorToken:
    return GeneratorToken(Tag.SHIFT)


def fm_token() -> GeneratorToken:
    return GeneratorToken(Tag.RELATIVE_FM_POTTER)


def twist_token() -> GeneratorToken:
    return GeneratorToken(Tag.SPHERICAL_TWIST_O)


def tensor_h_k3_token() -> GeneratorToken:
    return GeneratorToken(Tag.TENSOR_MINUS_H_K3)


def lift_token(base_word: tuple[GeneratorToken, ...], k_block: Matrix | None) -> GeneratorToken:
    return GeneratorToken(Tag.LIFT_BLOCK, base_word=tuple(base_word), k_block=k_block)


class IncompatibleTokenError(ValueError):
    """A generator token applied to a surface model it does not act on."""


@dataclass(frozen=True)
class ActionMatrix:
    """One autoequivalence action: matrix, the word that built it, the model."""

    matrix: Matrix
    word: tuple[GeneratorToken, ...]
    model: SurfaceModel

    def __post_init__(self) -> None:
        if self.matrix.dimension != self.model.rank:
            raise ValueError("matrix dimension must equal the model rank")

    def word_text(self) -> str:
        return ";".join(t.label() for t in self.word)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def tensor_line_bundle(model: SurfaceModel, a: int, b: int) -> ActionMatrix:
    """Action of tensoring by O(D), D = a*A + b*B, on a bielliptic model.

    Chern multiplication with D*D = 2ab gives the basis images
    [S] -> [S] + aA + bB + ab[pt], A -> A + b[pt], B -> B + a[pt],
    [pt] -> [pt].
    """
    if model.kind != SurfaceKind.BIELLIPTIC:
        raise IncompatibleTokenError("tensor(a,b) acts on bielliptic models")
    m = Matrix.from_rows(
        [
            [1, a, b, a * b],
            [0, 1, 0, b],
            [0, 0, 1, a],
            [0, 0, 0, 1],
        ]
    )
    return ActionMatrix(m, (tensor_token(a, b),), model)


def shift(model: SurfaceModel) -> ActionMatrix:
    """The shift [1]: negation of every class, on any model."""
    return ActionMatrix(-Matrix.identity(model.rank), (shift_token(),), model)


def relative_fm_potter(model: SurfaceModel) -> ActionMatrix:
    """Relative Fourier-Mukai transform along the first elliptic fibration,
    attached to the unipotent matrix [[1,1],[0,1]].

    Basis images: [S] -> [S], A -> n[S] + A, B -> B, [pt] -> kB + [pt].
    """
    if model.kind != SurfaceKind.BIELLIPTIC:
        raise IncompatibleTokenError("fm_p acts on bielliptic models")
    n, k = model.n, model.k
    m = Matrix.from_rows(
        [
            [1, 0, 0, 0],
            [n, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, k, 1],
        ]
    )
    return ActionMatrix(m, (fm_token(),), model)


def spherical_twist_O(model: SurfaceModel) -> ActionMatrix:
    """Numerical action of the spherical twist at the structure sheaf on K3:
    the reflection v -> v + <v, delta> delta in delta = (1, 0, 1)."""
    if model.kind != SurfaceKind.K3:
        raise IncompatibleTokenError("twistO acts on K3 models")
    m = Matrix.from_rows([[0, 0, -1], [0, 1, 0], [-1, 0, 0]])
    return ActionMatrix(m, (twist_token(),), model)


def tensor_minus_H_K3(model: SurfaceModel) -> ActionMatrix:
    """Tensoring by O(-H) on K3 in Mukai coordinates:
    (r, m, s) -> (r, m - r, s - 2d*m + d*r)."""
    if model.kind != SurfaceKind.K3:
        raise IncompatibleTokenError("tensorHK3 acts on K3 models")
    d = model.d
    m = Matrix.from_rows([[1, -1, d], [0, 1, -2 * d], [0, 0, 1]])
    return ActionMatrix(m, (tensor_h_k3_token(),), model)


def lift_block(base: ActionMatrix, k_block: Matrix | None, cover: SurfaceModel) -> ActionMatrix:
    """Block-diagonal lift of a base action to a canonical-cover model.

    The K-block must be an isometry of the negative definite gram_K
    (transpose * gram_K * k_block == gram_K); its eigenvalues then all have
    modulus 1, so the lift's spectral radius equals the base's.
    """
    if not cover.is_block:
        raise IncompatibleTokenError("lift_block needs a cover block model")
    if base.model != cover.base:
        raise ValueError("base action must live on the cover's base model")
    if cover.ell == 0:
        if k_block is not None:
            raise ValueError("cover has no K block")
    else:
        if k_block is None or k_block.dimension != cover.ell:
            raise ValueError(f"K block must be {cover.ell} x {cover.ell}")
        g = cover.gram_k
        if k_block.transpose() * g * k_block != g:
            raise ValueError("K-block must be unitary")
    m = block_diagonal(base.matrix, k_block)
    return ActionMatrix(m, (lift_token(base.word, k_block),), cover)


def token_action(token: GeneratorToken, model: SurfaceModel) -> ActionMatrix:
    if token.tag == Tag.TENSOR_LINE_BUNDLE:
        act = tensor_line_bundle(model, token.a, token.b)
    elif token.tag == Tag.SHIFT:
        act = shift(model)
    elif token.tag == Tag.RELATIVE_FM_POTTER:
        act = relative_fm_potter(model)
    elif token.tag == Tag.SPHERICAL_TWIST_O:
        act = spherical_twist_O(model)
    elif token.tag == Tag.TENSOR_MINUS_H_K3:
        act = tensor_minus_H_K3(model)
    elif token.tag == Tag.LIFT_BLOCK:
        if not model.is_block:
            raise IncompatibleTokenError("lift tokens act on cover block models")
        base_act = compose(token.base_word, model.base)
        act = lift_block(base_act, token.k_block, model)
    else:  # pragma: no cover
        raise IncompatibleTokenError(f"unknown token {token}")
    if token.inverted:
        return ActionMatrix(act.matrix.inverse(), (token,), model)
    return act


def compose(word, model: SurfaceModel) -> ActionMatrix:
    """Compose a word of generator tokens (rightmost applied first).

    The empty word gives the identity.
    """
    word = tuple(word)
    m = Matrix.identity(model.rank)
    for token in word:
        m = m * token_action(token, model).matrix
    return ActionMatrix(m, word, model)


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsometryVerdict:
    ok: bool
    witness: tuple[str, str] | None = None
    expected: Fraction | None = None
    actual: Fraction | None = None


def is_numerical_isometry(act: ActionMatrix) -> IsometryVerdict:
    """Does the action preserve the Euler pairing on all basis pairs?

    On failure, reports the first failing basis pair with the pairing value
    before and after.
    """
    g = act.model.euler_gram()
    m = act.matrix
    transported = m * g * m.transpose()
    labels = act.model.basis_labels
    for i in range(act.model.rank):
        for j in range(act.model.rank):
            if transported.entry(i, j) != g.entry(i, j):
                return IsometryVerdict(
                    ok=False,
                    witness=(labels[i], labels[j]),
                    expected=g.entry(i, j),
                    actual=transported.entry(i, j),
                )
    return IsometryVerdict(ok=True)


def fiber_projection_check(act: ActionMatrix, p_matrix: Matrix) -> bool:
    """Check that the action projects to p_matrix on (rank, c1 . f).

    The fiber functional is calibrated to f = n*B, the unique multiple of B
    under which the relative Fourier-Mukai generator realizes its attached
    SL(2, Z) matrix on all basis vectors.
    """
    if act.model.kind != SurfaceKind.BIELLIPTIC:
        raise IncompatibleTokenError("fiber projection is defined on bielliptic models")
    if p_matrix.dimension != 2:
        raise ValueError("p_matrix must be 2 x 2")
    if p_matrix.det() != 1:
        raise ValueError("p_matrix must have determinant 1")
    n = act.model.n

    def project(v) -> tuple[Fraction, Fraction]:
        return (v[0], n * v[1])

    basis = [
        (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    ]
    for i, e in enumerate(basis):
        image = act.matrix.rows[i]  # row i is the image of basis vector i
        got = project(image)
        want = p_matrix.apply(project(e))
        if got != tuple(want):
            return False
    return True


# ---------------------------------------------------------------------------
# word text syntax (CLI surface): `tensor(a,b)`, `tensorH(-1)`, `shift`,
# `fm_p`, `twistO`, `tensorHK3(-1)`; `;`-separated, applied right to left.
# ---------------------------------------------------------------------------

_TENSOR_RE = re.compile(r"^tensor\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")
_TENSOR_H_RE = re.compile(r"^tensorH\(\s*(-?\d+)\s*\)$")
_TENSOR_HK3_RE = re.compile(r"^tensorHK3\(\s*(-?\d+)\s*\)$")


def parse_word(text: str, model: SurfaceModel) -> tuple[GeneratorToken, ...]:
    """Parse the `;`-separated word syntax against a surface model.

    On block cover models the word is parsed against the base model and
    wrapped in a single identity-K-block lift.
    """
    if model.is_block:
        base_word = parse_word(text, model.base)
        k = Matrix.identity(model.ell) if model.ell else None
        return (lift_token(base_word, k),)

    tokens: list[GeneratorToken] = []
    text = text.strip()
    if not text:
        return ()
    for raw in text.split(";"):
        part = raw.strip()
        if not part:
            raise ValueError("empty token in word")
        if part == "shift":
            tokens.append(shift_token())
            continue
        if part == "fm_p":
            tokens.append(fm_token())
            continue
        if part == "twistO":
            tokens.append(twist_token())
            continue
        m = _TENSOR_RE.match(part)
        if m:
            tokens.append(tensor_token(int(m.group(1)), int(m.group(2))))
            continue
        m = _TENSOR_H_RE.match(part)
        if m:
            if model.kind != SurfaceKind.BIELLIPTIC:
                raise IncompatibleTokenError("tensorH(m) needs a bielliptic model")
            t = int(m.group(1))
            tokens.append(tensor_token(t * model.n, t * model.k))
            continue
        m = _TENSOR_HK3_RE.match(part)
        if m:
            if int(m.group(1)) != -1:
                raise ValueError("tensorHK3 supports only the -1 twist")
            tokens.append(tensor_h_k3_token())
            continue
        raise ValueError(f"unknown token {part!r}")
    return tuple(tokens)
