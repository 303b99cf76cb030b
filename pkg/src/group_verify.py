"""
Induced homomorphisms of the Coxeter functor, checked against finite images
"""

import logging
from typing import Dict, Mapping, Tuple

from src.coset_table import CosetTable
from src.exceptions import PresentationError
from src.morphism import Morphism
from src.presentation import Generator, GroupPresentation

logger = logging.getLogger("GroupVerify")

GeneratorMap = Dict[Generator, Tuple[Generator, ...]]


def induced_generator_map(m: Morphism) -> GeneratorMap:
    """Each source generator goes to the one-letter word of its image vertex"""
    return {v: (w,) for v, w in m.vertex_map}


def vertex_generator_map(vmap: Mapping[Generator, Generator], source_p: GroupPresentation,
                         target_p: GroupPresentation) -> GeneratorMap:
    """One-letter images for a plain vertex map; it need not be a morphism of complexes"""
    known = set(target_p.generators)
    stray = sorted(set(vmap) - set(source_p.generators))
    if stray:
        raise PresentationError(f"{stray[0]} is not a source generator", {"extra": stray})
    outside = [g for g in source_p.generators if g in vmap and vmap[g] not in known]
    if outside:
        raise PresentationError(f"image of {outside[0]} is not a target generator",
                                {"generator": outside[0], "image": vmap[outside[0]]})
    return {g: (vmap[g],) for g in source_p.generators if g in vmap}


def verify_homomorphism(genmap: Mapping[Generator, Tuple[Generator, ...]], source_p: GroupPresentation,
                        target_table: CosetTable) -> bool:
    """True iff every source relator, pushed through genmap, acts trivially on the target table"""
    unmapped = [g for g in source_p.generators if g not in genmap]
    if unmapped:
        raise PresentationError(f"generator {unmapped[0]} is not mapped", {"unmapped": unmapped})

    for r in source_p.relators:
        image = [letter for g in r.word for letter in genmap[g]] * r.exponent
        if not target_table.stabilizes_all(image):
            logger.debug(f"Relator {r} does not map to the identity")
            return False
    return True
