import itertools
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from src.models.group import GroupSpec
from src.models.polynomial import GroupRingElement
from src.utils.errors import GroupError

# (원본 인덱스 배열, 부호): new[h] = sign * c[source[h]]
Transform = Tuple[Tuple[int, ...], int]


def _coordinate_permutations(group: GroupSpec) -> List[Tuple[int, ...]]:
    """위수가 같은 좌표끼리의 치환"""
    classes = {}
    for i, n in enumerate(group.orders):
        classes.setdefault(n, []).append(i)
    blocks = list(classes.values())

    perms = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        sigma = [0] * group.rank
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                sigma[dst] = src
        perms.append(tuple(sigma))
    return perms


@lru_cache(maxsize=32)
def group_transforms(group: GroupSpec) -> Tuple[Transform, ...]:
    """부호 반전, 단항식 이동, 좌표 역원 x_i -> x_i^{-1}, 같은 위수 좌표 치환이 생성하는 궤도 변환"""
    elements = group.elements()
    size = group.cardinality
    inversions = list(itertools.product(*((1, -1) if n > 2 else (1,) for n in group.orders)))

    seen = {}
    for sign in (-1, 1):
        for sigma in _coordinate_permutations(group):
            for inversion in inversions:
                for shift in elements:
                    source = [0] * size
                    for index, e in enumerate(elements):
                        image = tuple(
                            (inversion[i] * e[sigma[i]] + shift[i]) % n
                            for i, n in enumerate(group.orders)
                        )
                        source[group.element_index(image)] = index
                    seen.setdefault((tuple(source), sign), None)
    return tuple(seen)


def canonical_form(element: GroupRingElement, group: Optional[GroupSpec] = None) -> GroupRingElement:
    """궤도의 대표원: 사전식으로 가장 큰 계수 배열 (상수항부터 비교, |M| 은 궤도 위에서 일정)"""
    if group is not None and group != element.group:
        raise GroupError("원소의 군이 요청한 군과 다릅니다.")
    coeffs = element.coeffs
    best = max(
        tuple(sign * coeffs[s] for s in source)
        for source, sign in group_transforms(element.group)
    )
    return GroupRingElement(element.group, best)


def orbit_representative_mask(batch: np.ndarray, transforms: Tuple[Transform, ...]) -> np.ndarray:
    """각 행이 자기 궤도의 대표원(사전식 최댓값)인지 (벡터화, 탈락한 행은 즉시 제외)"""
    rows = batch
    alive = np.arange(batch.shape[0])
    identity = tuple(range(batch.shape[1]))

    for source, sign in transforms:
        if not len(alive):
            break
        if sign == 1 and source == identity:
            continue
        image = rows[:, list(source)] * sign
        diff = image - rows
        nonzero = diff != 0
        first = nonzero.argmax(axis=1)
        larger = nonzero.any(axis=1) & (diff[np.arange(len(rows)), first] > 0)
        if larger.any():
            rows = rows[~larger]
            alive = alive[~larger]

    mask = np.zeros(batch.shape[0], dtype=bool)
    mask[alive] = True
    return mask
