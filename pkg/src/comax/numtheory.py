"""Small integer helpers: factorization and prime-power tests."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=4096)
def factorize(n: int) -> dict[int, int]:
    """Prime factorization as an ordered {prime: exponent} dict."""
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


def is_odd_prime_power(n: int) -> bool:
    return is_prime_power(n) and n % 2 == 1


def prime_divisors(n: int) -> list[int]:
    return list(factorize(n))


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def partitions(n: int, largest: int | None = None):
    """Integer partitions of n in descending (reverse lexicographic) order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest
