"""Symmetric groups, positive braid words and integer braid sums.

Permutations are one-based image tuples, composed as functions:
(p * r)(x) = p(r(x)).  A braid word (i_1, ..., i_k) stands for the product
c_{i_1} ... c_{i_k}; as an operator the rightmost letter acts first.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations


class BraidError(ValueError):
    pass


# permutations

def perm_identity(n):
    return tuple(range(1, n + 1))


def perm_mul(p, r):
    """(p r)(x) = p(r(x))."""
    return tuple(p[r[x] - 1] for x in range(len(r)))


def perm_inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def transposition(n, i):
    """The simple transposition s_i = (i, i+1) in S_n."""
    if not 1 <= i < n:
        raise BraidError("s_%d is not in S_%d" % (i, n))
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_from_word(word, n):
    p = perm_identity(n)
    for i in word:
        p = perm_mul(p, transposition(n, i))
    return p


def inversions(p):
    return sum(1 for a, b in combinations(range(len(p)), 2) if p[a] > p[b])


def _check_perm(p):
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise BraidError("%r is not a permutation of 1..%d" % (p, len(p)))
    return p


@lru_cache(maxsize=None)
def _reduced_word(p):
    # greedy on the smallest left descent gives the lexicographically least word
    word = []
    n = len(p)
    cur = p
    while True:
        inv = perm_inverse(cur)
        for i in range(1, n):
            if inv[i - 1] > inv[i]:
                word.append(i)
                cur = perm_mul(transposition(n, i), cur)
                break
        else:
            return tuple(word)


def all_reduced_words(p):
    """Every reduced decomposition of p (exponential; for small n only)."""
    p = _check_perm(p)
    n = len(p)
    if inversions(p) == 0:
        return [()]
    inv = perm_inverse(p)
    out = []
    for i in range(1, n):
        if inv[i - 1] > inv[i]:
            rest = perm_mul(transposition(n, i), p)
            out.extend((i,) + w for w in all_reduced_words(rest))
    return out


def is_reduced(word, n):
    return inversions(perm_from_word(word, n)) == len(word)


# words and sums

@dataclass(frozen=True)
class BraidWord:
    letters: tuple
    strands: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for i in self.letters:
            if not 1 <= i < self.strands:
                raise BraidError("letter c_%d needs more than %d strands" % (i, self.strands))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        n = max(self.strands, other.strands)
        return BraidWord(self.letters + other.letters, n)

    def to_sum(self):
        return BraidSum({self.letters: 1}, self.strands)

    def __repr__(self):
        return "BraidWord(%s)" % (_word_str(self.letters),)


def _word_str(letters):
    if not letters:
        return "1"
    return " ".join("c%d" % i for i in letters)


class BraidSum:
    """Integer combination of positive braid words on a fixed number of strands.

    Equality is word-by-word; use bvs evaluation to compare operators.
    """

    __slots__ = ("terms", "strands")

    def __init__(self, terms, strands):
        clean = {}
        for w, c in dict(terms).items():
            w = tuple(w)
            for i in w:
                if not 1 <= i < strands:
                    raise BraidError("letter c_%d needs more than %d strands" % (i, strands))
            if c:
                clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}
        self.strands = strands

    @classmethod
    def zero(cls, strands):
        return cls({}, strands)

    @classmethod
    def one(cls, strands):
        return cls({(): 1}, strands)

    def with_strands(self, n):
        if n < self.strands and any(i >= n for w in self.terms for i in w):
            raise BraidError("cannot shrink to %d strands" % n)
        return BraidSum(self.terms, n)

    def __add__(self, other):
        n = max(self.strands, other.strands)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return BraidSum(out, n)

    def __neg__(self):
        return BraidSum({w: -c for w, c in self.terms.items()}, self.strands)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BraidSum({w: c * other for w, c in self.terms.items()}, self.strands)
        if isinstance(other, BraidWord):
            other = other.to_sum()
        n = max(self.strands, other.strands)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return BraidSum(out, n)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, BraidSum):
            return NotImplemented
        return self.strands == other.strands and self.terms == other.terms

    def __hash__(self):
        return hash((self.strands, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def canonical(self):
        """Rewrite every (reduced) word as the canonical word of its permutation.

        Words that are not reduced are left untouched.
        """
        out = {}
        for w, c in self.terms.items():
            if is_reduced(w, self.strands):
                w = _reduced_word(perm_from_word(w, self.strands))
            out[w] = out.get(w, 0) + c
        return BraidSum(out, self.strands)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            body = _word_str(w)
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%d*%s" % (c, body))
        return " + ".join(parts)


# operations

def reduced_word(p):
    """Lexicographically smallest reduced decomposition of p."""
    p = _check_perm(p)
    return BraidWord(_reduced_word(p), max(len(p), 1))


def matsumoto(p):
    """The Matsumoto lift c_p, represented by the canonical reduced word."""
    return reduced_word(p)


def all_perms(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]


def shuffle_perms(k, l):
    """All pi in S_{k+l} increasing on 1..k and on k+1..k+l."""
    n = k + l
    out = []
    for first in combinations(range(1, n + 1), k):
        rest = [x for x in range(1, n + 1) if x not in first]
        out.append(tuple(first) + tuple(rest))
    return sorted(out)


def symmetrizer(n):
    """S_n: the sum of c_pi over S_n."""
    terms = {}
    for p in all_perms(n):
        w = _reduced_word(p)
        terms[w] = terms.get(w, 0) + 1
    return BraidSum(terms, max(n, 1))


def shuffle_sum(k, l):
    """S_{k,l}: the sum of c_{pi^-1} over k-shuffles."""
    terms = {}
    for p in shuffle_perms(k, l):
        w = _reduced_word(perm_inverse(p))
        terms[w] = terms.get(w, 0) + 1
    return BraidSum(terms, max(k + l, 1))


def longest_word(n):
    """omega_n = (c_{n-1})(c_{n-2} c_{n-1}) ... (c_1 ... c_{n-1}) in B_n."""
    letters = []
    for start in range(n - 1, 0, -1):
        letters.extend(range(start, n))
    return BraidWord(tuple(letters), max(n, 1))


def gnk_perms(n, k):
    """The set S_{n,k} inside S_{n+1}."""
    if k < 0 or k > n:
        return []
    out = []
    top = n + 1
    lo = n - k
    for first in combinations(range(1, top), lo):
        rest = sorted((x for x in range(1, top) if x not in first), reverse=True)
        out.append(tuple(first) + (top,) + tuple(rest))
    return sorted(out)


def gnk_def(n, k):
    """g_{n,k} as the sum of c_{pi^-1} over S_{n,k}; zero outside 0 <= k <= n."""
    terms = {}
    for p in gnk_perms(n, k):
        w = _reduced_word(perm_inverse(p))
        terms[w] = terms.get(w, 0) + 1
    return BraidSum(terms, n + 1)


def gnk_factored(n, k):
    """g_{n,k} = shift_{n-k}(omega_{k+1}) * S_{n-k,k}."""
    if k < 0 or k > n:
        raise BraidError("g_{%d,%d}: need 0 <= k <= n" % (n, k))
    omega = shift(longest_word(k + 1).to_sum(), n - k)
    return (omega.with_strands(n + 1) * shuffle_sum(n - k, k)).with_strands(n + 1)


def reverse_antimorphism(s):
    """phi: reverse each word."""
    if isinstance(s, BraidWord):
        return BraidWord(tuple(reversed(s.letters)), s.strands)
    return BraidSum({tuple(reversed(w)): c for w, c in s.terms.items()}, s.strands)


def shift(s, i):
    """shift_i: c_j -> c_{j+i}, adding i strands."""
    if isinstance(s, BraidWord):
        return BraidWord(tuple(x + i for x in s.letters), s.strands + i)
    return BraidSum({tuple(x + i for x in w): c for w, c in s.terms.items()}, s.strands + i)


def flip(s, n):
    """psi: c_j -> c_{n-j} on B_n."""
    if isinstance(s, BraidWord):
        return BraidWord(tuple(n - x for x in s.letters), n)
    return BraidSum({tuple(n - x for x in w): c for w, c in s.terms.items()}, n)


def descending_word(n):
    """c_n c_{n-1} ... c_1 on n+1 strands."""
    return BraidWord(tuple(range(n, 0, -1)), n + 1)
