"""Braid words, the Birman-Menasco families, and the Artin action.

A braid word is a strand count plus a sequence of nonzero ints: ``j`` is the
generator beta_j (strand j crosses over strand j+1) and ``-j`` its inverse.
Words are never reduced implicitly; :func:`freely_reduce` is the explicit
canonicalization step.

The text format accepted by :func:`parse_braid_word`::

    expr   := atom ( ('.' | WS+) atom )*
    atom   := item ( '^' sint )?
    item   := sint | ident '(' sint (',' sint)* ')' | '(' expr ')'
    sint   := '-'? [0-9]+
    ident  := 'B' | 'Gamma' | 'Phi' | 'Psi'

For example ``"-2.-2.1.-2.3.2.2.2.-1.2.-3"`` is B(4,0) and
``"Gamma(2)^-1"`` is ``[-2, -1, -1, -2]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from braidcover.errors import (
    BadDecompositionError,
    BadIndexError,
    MacroArityError,
    ParseError,
    StrandMismatchError,
    StrandRangeError,
)

__all__ = [
    "BraidWord",
    "StrandPermutation",
    "FreeWord",
    "parse_braid_word",
    "format_braid_word",
    "invert",
    "concat",
    "conjugate",
    "freely_reduce",
    "gamma_word",
    "phi_psi_words",
    "b_family",
    "bm_step",
    "bm_step_decomposed",
    "underlying_permutation",
    "closure_component_count",
    "exponent_sum",
    "artin_images",
    "artin_action",
    "pi1_presentation",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise StrandRangeError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise StrandRangeError(
                    f"letter {x} is not a generator of the {self.strands}-strand braid group"
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else invert(self)
        return BraidWord(self.strands, base.letters * abs(k))

    def __str__(self):
        return format_braid_word(self)

    def on_strands(self, strands: int) -> BraidWord:
        """The same letters read in a braid group with ``strands`` strands."""
        return BraidWord(strands, self.letters)

    def max_generator(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters), "text": format_braid_word(self)}


def format_braid_word(w: BraidWord) -> str:
    return ".".join(str(x) for x in w.letters)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatchError(f"cannot concatenate words on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def conjugate(w: BraidWord, u: BraidWord) -> BraidWord:
    """``u . w . u^-1``"""
    return concat(concat(u, w), invert(u))


def _reduce_letters(letters: Iterable[int]) -> list[int]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def freely_reduce(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(_reduce_letters(w.letters)))


# -- Birman-Menasco families ----------------------------------------------------


def gamma_word(r: int, strands: int) -> BraidWord:
    """``r.(r-1)...2.1.1.2...(r-1).r``"""
    if r < 1:
        raise BadIndexError(f"Gamma_r needs r >= 1, got {r}")
    if r > strands - 1:
        raise StrandRangeError(f"Gamma_{r} needs at least {r + 1} strands, got {strands}")
    down = tuple(range(r, 0, -1))
    return BraidWord(strands, down + down[::-1])


_PHI4 = (-2, -2, 1, -2)
_PSI4 = (2, 2, 2, -1, 2)


def phi_psi_words(m: int) -> tuple[BraidWord, BraidWord]:
    """The halves of B(m,0) = Phi_m.(m-1).Psi_m.(m-1)^-1, as m-strand words."""
    if m < 4:
        raise BadIndexError(f"Phi_m and Psi_m are defined for m >= 4, got {m}")
    phi, psi = _PHI4, _PSI4
    for j in range(4, m):
        phi = (j - 2, j - 1) + phi + (-(j - 1),)
        psi = (-(j - 1),) + psi + (j - 1,)
    return BraidWord(m, phi), BraidWord(m, psi)


def _assemble(phi: Sequence[int], psi: Sequence[int], m: int) -> BraidWord:
    return BraidWord(m, tuple(phi) + (m - 1,) + tuple(psi) + (-(m - 1),))


def b_family(m: int, k: int) -> BraidWord:
    """B(m,k): the Birman-Menasco operation applied k times to B(m,0)."""
    if m < 4:
        raise BadIndexError(f"B(m,k) is defined for m >= 4, got m={m}")
    if k < 0:
        raise BadIndexError(f"B(m,k) is defined for k >= 0, got k={k}")
    phi, psi = phi_psi_words(m)
    g = gamma_word(m - 2, m)
    phi_k = invert(g).letters * k + phi.letters + g.letters * k
    return _assemble(phi_k, psi.letters, m)


def _check_decomposition(part: BraidWord, m: int, name: str):
    if part.max_generator() >= m - 1:
        raise BadDecompositionError(f"{name} uses a generator >= {m - 1}")


def bm_step_decomposed(phi: BraidWord, psi: BraidWord, m: int) -> tuple[BraidWord, BraidWord]:
    """One Birman-Menasco move on the pair: Phi -> Gamma^-1.Phi.Gamma, Psi fixed."""
    if m < 3:
        raise BadIndexError(f"the Birman-Menasco operation needs m >= 3, got {m}")
    _check_decomposition(phi, m, "phi")
    _check_decomposition(psi, m, "psi")
    g = gamma_word(m - 2, m)
    new_phi = BraidWord(m, invert(g).letters + phi.letters + g.letters)
    return new_phi, psi.on_strands(m)


def bm_step(phi: BraidWord, psi: BraidWord, m: int) -> BraidWord:
    """Phi.(m-1).Psi.(m-1)^-1  ->  Gamma^-1.Phi.Gamma.(m-1).Psi.(m-1)^-1"""
    new_phi, new_psi = bm_step_decomposed(phi, psi, m)
    return _assemble(new_phi.letters, new_psi.letters, m)


# -- permutations ---------------------------------------------------------------


@dataclass(frozen=True)
class StrandPermutation:
    strands: int
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.strands + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{self.strands}")

    @classmethod
    def identity(cls, strands: int) -> StrandPermutation:
        return cls(strands, tuple(range(1, strands + 1)))

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def then(self, other: StrandPermutation) -> StrandPermutation:
        """Apply ``self`` first, then ``other``."""
        return StrandPermutation(self.strands, tuple(other(self(p)) for p in range(1, self.strands + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.strands + 1):
            if start in seen:
                continue
            cyc = []
            p = start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = self(p)
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.strands + 1))

    def to_json(self) -> dict:
        return {"strands": self.strands, "images": list(self.images), "cycles": [list(c) for c in self.cycles()]}


def underlying_permutation(w: BraidWord) -> StrandPermutation:
    images = list(range(1, w.strands + 1))
    for x in w.letters:
        i = abs(x)
        for p, q in enumerate(images):
            if q == i:
                images[p] = i + 1
            elif q == i + 1:
                images[p] = i
    return StrandPermutation(w.strands, tuple(images))


def closure_component_count(w: BraidWord) -> int:
    return len(underlying_permutation(w).cycles())


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


# -- free group and the Artin action ----------------------------------------------


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word in mu_1..mu_n; letter ``-i`` is mu_i^-1."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        reduced = tuple(_reduce_letters(int(x) for x in self.letters))
        if any(x == 0 for x in reduced):
            raise ValueError("free group letters must be nonzero")
        object.__setattr__(self, "letters", reduced)

    @classmethod
    def generator(cls, i: int) -> FreeWord:
        return cls((i,))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple(-x for x in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def abelianize(self, n: int) -> list[int]:
        counts = [0] * n
        for x in self.letters:
            counts[abs(x) - 1] += 1 if x > 0 else -1
        return counts

    def tokens(self, prefix: str = "mu") -> list[str]:
        return [f"{prefix}{x}" if x > 0 else f"{prefix}{-x}^-1" for x in self.letters]

    def __str__(self):
        return " ".join(self.tokens()) or "1"


def _artin_letter_table(letter: int, n: int) -> dict[int, tuple[int, ...]]:
    j = abs(letter)
    if letter > 0:
        # mu_j -> mu_j mu_{j+1} mu_j^-1,  mu_{j+1} -> mu_j
        table = {j: (j, j + 1, -j), j + 1: (j,)}
    else:
        # mu_j -> mu_{j+1},  mu_{j+1} -> mu_{j+1}^-1 mu_j mu_{j+1}
        table = {j: (j + 1,), j + 1: (-(j + 1), j, j + 1)}
    for g, img in list(table.items()):
        table[-g] = tuple(-x for x in reversed(img))
    return table


def artin_images(w: BraidWord) -> list[FreeWord]:
    """Images of mu_1..mu_n, applying the letters first to last."""
    n = w.strands
    images = [[i] for i in range(1, n + 1)]
    for letter in w.letters:
        table = _artin_letter_table(letter, n)
        new_images = []
        for img in images:
            out: list[int] = []
            for x in img:
                sub = table.get(x)
                if sub is None:
                    sub = (x,)
                for y in sub:
                    if out and out[-1] == -y:
                        out.pop()
                    else:
                        out.append(y)
            new_images.append(out)
        images = new_images
    return [FreeWord(tuple(img)) for img in images]


def artin_action(w: BraidWord, i: int) -> FreeWord:
    if not 1 <= i <= w.strands:
        raise BadIndexError(f"mu_{i} is not a generator of the free group of rank {w.strands}")
    return artin_images(w)[i - 1]


def pi1_presentation(w: BraidWord) -> dict:
    """<mu_1..mu_n, s, t | [s,mu_i], [s,t], t mu_i t^-1 = phi(mu_i)> with phi the Artin action of w.

    Relators are lists of letter tokens such as ``"mu2^-1"`` or ``"t"``.
    """
    n = w.strands
    gens = [f"mu{i}" for i in range(1, n + 1)] + ["s", "t"]
    relators = []
    for i in range(1, n + 1):
        relators.append(["s", f"mu{i}", "s^-1", f"mu{i}^-1"])
    relators.append(["s", "t", "s^-1", "t^-1"])
    for i, img in enumerate(artin_images(w), start=1):
        relators.append(["t", f"mu{i}", "t^-1"] + img.inverse().tokens())
    return {"generators": gens, "relators": relators}


# -- parser -------------------------------------------------------------------

_MACRO_ARITY = {"B": 2, "Gamma": 1, "Phi": 1, "Psi": 1}


class _Parser:
    def __init__(self, text: str, strands: int):
        self.text = text
        self.pos = 0
        self.strands = strands

    def error(self, msg):
        raise ParseError(msg, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> bool:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.pos > start

    def parse(self) -> list[int]:
        self.skip_ws()
        if self.pos == len(self.text):
            return []
        letters = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected character {self.peek()!r}")
        return letters

    def expr(self) -> list[int]:
        letters = self.atom()
        while True:
            save = self.pos
            had_ws = self.skip_ws()
            if self.peek() == ".":
                self.pos += 1
                self.skip_ws()
            elif not had_ws or self.peek() in ("", ")"):
                self.pos = save
                return letters
            letters += self.atom()

    def atom(self) -> list[int]:
        letters = self.item()
        if self.peek() == "^":
            self.pos += 1
            k = self.sint()
            if k < 0:
                letters = [-x for x in reversed(letters)]
            letters = letters * abs(k)
        return letters

    def sint(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        digits = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def item(self) -> list[int]:
        c = self.peek()
        if c == "(":
            self.pos += 1
            self.skip_ws()
            letters = self.expr()
            self.skip_ws()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return letters
        if c == "-" or c.isdigit():
            start = self.pos
            x = self.sint()
            if x == 0:
                self.pos = start
                self.error("0 is not a braid generator")
            if abs(x) > self.strands - 1:
                raise StrandRangeError(f"letter {x} needs more than {self.strands} strands")
            return [x]
        if c.isalpha():
            return self.macro()
        self.error(f"unexpected {c!r}" if c else "unexpected end of input")

    def macro(self) -> list[int]:
        start = self.pos
        while self.peek().isalpha():
            self.pos += 1
        name = self.text[start:self.pos]
        if name not in _MACRO_ARITY:
            self.pos = start
            self.error(f"unknown macro {name!r}")
        if self.peek() != "(":
            self.error(f"{name} needs an argument list")
        self.pos += 1
        args = []
        while True:
            self.skip_ws()
            args.append(self.sint())
            self.skip_ws()
            if self.peek() == ",":
                self.pos += 1
                continue
            if self.peek() == ")":
                self.pos += 1
                break
            self.error("expected ',' or ')'")
        if len(args) != _MACRO_ARITY[name]:
            raise MacroArityError(f"{name} takes {_MACRO_ARITY[name]} argument(s), got {len(args)}")
        try:
            if name == "B":
                word = b_family(*args)
            elif name == "Gamma":
                word = gamma_word(args[0], max(self.strands, args[0] + 1))
            elif name == "Phi":
                word = phi_psi_words(args[0])[0]
            else:
                word = phi_psi_words(args[0])[1]
        except BadIndexError as exc:
            raise MacroArityError(f"bad arguments to {name}: {exc}") from exc
        if word.max_generator() > self.strands - 1:
            raise StrandRangeError(f"{name}{tuple(args)} needs more than {self.strands} strands")
        return list(word.letters)


def parse_braid_word(text: str, strands: int) -> BraidWord:
    if not isinstance(strands, int) or strands < 2:
        raise StrandRangeError(f"strand count must be >= 2, got {strands!r}")
    return BraidWord(strands, tuple(_Parser(text, strands).parse()))
