"""Breadth-first enumeration of generator words, deduplicated by exact matrix.

Words are explored by nondecreasing length in generator-index order, so the
first word reaching a matrix is the canonical (length, lexicographic)
representative. Hits are words whose spectral radius exceeds 1, decided
exactly per node. Frontier expansion may be chunked across worker threads;
the merge is performed in task order, so results are independent of the
worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .actions import ActionMatrix, GeneratorToken, compose, token_action
from .algebraic import RealAlgebraicEnclosure
from .matrices import Matrix
from .spectral import spectral_radius, spectral_radius_exceeds_one
from .surfaces import SurfaceModel


@dataclass(frozen=True)
class SearchConfig:
    generators: tuple[GeneratorToken, ...]
    max_len: int = 3
    max_states: int = 10000
    report_all: bool = False
    include_inverses: bool = False

    def __post_init__(self) -> None:
        if self.max_len < 0:
            raise ValueError("max_len must be >= 0")
        if self.max_states < 1:
            raise ValueError("max_states must be >= 1")
        object.__setattr__(self, "generators", tuple(self.generators))


@dataclass(frozen=True)
class SearchHit:
    word: tuple[GeneratorToken, ...]
    rho: RealAlgebraicEnclosure
    length: int

    def word_text(self) -> str:
        return ";".join(t.label() for t in self.word)

    def to_json(self, digits: int = 12) -> dict:
        return {
            "word": self.word_text(),
            "length": self.length,
            "rho": {
                "min_poly": str(self.rho.poly),
                "interval": [str(self.rho.lo), str(self.rho.hi)],
                "decimal": self.rho.decimal(digits),
            },
        }


@dataclass(frozen=True)
class SearchResult:
    hits: tuple[SearchHit, ...]
    states: int
    words_enumerated: int
    budget: str  # "max_len" | "max_states" | "first_hit"

    def summary_json(self) -> dict:
        return {
            "hits": len(self.hits),
            "states": self.states,
            "words_enumerated": self.words_enumerated,
            "budget": self.budget,
        }


def canonical_key(m: Matrix) -> str:
    """Deterministic serialization, injective on exact matrices."""
    cells = ",".join(f"{x.numerator}/{x.denominator}" for row in m.rows for x in row)
    return f"{m.dimension}|{cells}"


@dataclass
class _Node:
    matrix: Matrix
    word: tuple[GeneratorToken, ...]
    last: int | None  # generator index of the last applied token


def search(model: SurfaceModel, config: SearchConfig, workers: int = 1) -> SearchResult:
    """BFS over words of the configured generators on the model.

    Two words reaching the same exact matrix are merged, the first-found
    (length, lexicographic on generator indices) word kept. With
    report_all=False the search stops at the first hit; otherwise every
    deduplicated hit within the budget is returned, sorted by discovery
    order, which is (length, lexicographic word).
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    gens: list[tuple[GeneratorToken, Matrix, int | None]] = []
    for token in config.generators:
        act = token_action(token, model)  # raises on incompatible generators
        gens.append((token, act.matrix, None))
    if config.include_inverses:
        count = len(gens)
        for idx in range(count):
            token, mat, _ = gens[idx]
            inv_token = GeneratorToken(
                token.tag,
                a=token.a,
                b=token.b,
                base_word=token.base_word,
                k_block=token.k_block,
                inverted=not token.inverted,
            )
            gens.append((inv_token, mat.inverse(), idx))
        for idx in range(count):
            gens[idx] = (gens[idx][0], gens[idx][1], count + idx)

    identity = Matrix.identity(model.rank)
    seen = {canonical_key(identity)}
    frontier = [_Node(identity, (), None)]
    hits: list[SearchHit] = []
    states = 1
    words_enumerated = 0
    budget = "max_len"

    def expand(args: tuple[int, int]) -> tuple[int, int, Matrix]:
        node_idx, gen_idx = args
        product = frontier[node_idx].matrix * gens[gen_idx][1]
        return node_idx, gen_idx, product

    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for _length in range(1, config.max_len + 1):
            tasks = [
                (node_idx, gen_idx)
                for node_idx in range(len(frontier))
                for gen_idx in range(len(gens))
                # prune immediate cancellation: token followed by its inverse
                if frontier[node_idx].last is None or gens[gen_idx][2] != frontier[node_idx].last
            ]
            if not tasks:
                break
            if executor is None:
                products = [expand(t) for t in tasks]
            else:
                products = list(executor.map(expand, tasks, chunksize=max(1, len(tasks) // workers)))
            new_frontier: list[_Node] = []
            stop = False
            for node_idx, gen_idx, product in products:
                words_enumerated += 1
                key = canonical_key(product)
                if key in seen:
                    continue
                if states + 1 > config.max_states:
                    budget = "max_states"
                    stop = True
                    break
                seen.add(key)
                states += 1
                word = frontier[node_idx].word + (gens[gen_idx][0],)
                new_frontier.append(_Node(product, word, gen_idx))
                if spectral_radius_exceeds_one(product):
                    hits.append(SearchHit(word, spectral_radius(product), len(word)))
                    if not config.report_all:
                        budget = "first_hit"
                        stop = True
                        break
            if stop:
                break
            frontier = new_frontier
    finally:
        if executor is not None:
            executor.shutdown(wait=False)

    return SearchResult(tuple(hits), states, words_enumerated, budget)
