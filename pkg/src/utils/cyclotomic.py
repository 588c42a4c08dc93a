import threading
from typing import Dict, List, Sequence, Tuple

from sympy import divisors, totient

# 프로세스 단위 캐시 (최초 생성 시에만 잠금)
_cyclotomic_cache: Dict[int, Tuple[int, ...]] = {}
_residue_cache: Dict[int, Tuple[Tuple[int, ...], ...]] = {}
_cache_lock = threading.Lock()


def euler_phi(n: int) -> int:
    return int(totient(n))


def poly_divmod_monic(a: Sequence[int], m: Sequence[int]) -> Tuple[List[int], List[int]]:
    """정수 다항식 a 를 monic m 으로 나눈 몫과 나머지 (계수는 낮은 차수부터)"""
    if not m or m[-1] != 1:
        raise ValueError("나누는 다항식은 monic 이어야 합니다.")
    deg_m = len(m) - 1
    r = list(a)
    if len(r) <= deg_m:
        return [0], r + [0] * (deg_m - len(r)) if deg_m else []
    q = [0] * (len(r) - deg_m)
    for i in range(len(r) - 1, deg_m - 1, -1):
        c = r[i]
        if c:
            q[i - deg_m] = c
            for j in range(deg_m + 1):
                r[i - deg_m + j] -= c * m[j]
    return q, r[:deg_m]


def cyclotomic_coeffs(d: int) -> Tuple[int, ...]:
    """원분다항식 Phi_d 의 계수 (약수 체: x^d - 1 을 하위 원분다항식으로 나눔)"""
    cached = _cyclotomic_cache.get(d)
    if cached is not None:
        return cached

    with _cache_lock:
        return _cyclotomic_unlocked(d)


def _cyclotomic_unlocked(d: int) -> Tuple[int, ...]:
    # 잠금을 이미 잡은 상태에서 재귀 계산
    cached = _cyclotomic_cache.get(d)
    if cached is not None:
        return cached
    poly = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d)[:-1]:
        poly, rem = poly_divmod_monic(poly, _cyclotomic_unlocked(e))
        if any(rem):
            raise ArithmeticError(f"Phi_{e} 가 x^{d}-1 을 나누지 않습니다.")
    _cyclotomic_cache[d] = tuple(poly)
    return _cyclotomic_cache[d]


def power_residues(d: int) -> Tuple[Tuple[int, ...], ...]:
    """e = 0..d-1 에 대해 x^e mod Phi_d 의 계수 벡터 (길이 phi(d))"""
    cached = _residue_cache.get(d)
    if cached is not None:
        return cached

    phi = cyclotomic_coeffs(d)
    deg = len(phi) - 1
    rows = []
    current = [1] + [0] * (deg - 1)
    for _ in range(d):
        rows.append(tuple(current))
        # x 를 곱하고 x^deg 를 Phi_d 로 소거
        top = current[-1]
        current = [0] + current[:-1]
        if top:
            current = [c - top * p for c, p in zip(current, phi[:deg])]
    residues = tuple(rows)

    with _cache_lock:
        _residue_cache.setdefault(d, residues)
    return _residue_cache[d]


def reduce_mod_cyclotomic(coeffs: Sequence[int], d: int) -> Tuple[int, ...]:
    """Z[x] 원소를 Z[x]/Phi_d 의 표준 대표로 축약"""
    residues = power_residues(d)
    out = [0] * euler_phi(d)
    for e, c in enumerate(coeffs):
        if c:
            for i, r in enumerate(residues[e % d]):
                out[i] += c * r
    return tuple(out)
