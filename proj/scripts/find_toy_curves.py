#!/usr/bin/env python3
# Copyright 2026 The Ecstego Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Search for small Weierstrass curves with prime group order.

The test curves registered in src/curve.cpp were produced by this script.
A curve y^2 = x^3 + a*x + b over F_p qualifies when it is nonsingular and
its point count (including the point at infinity) is prime, so that every
finite point generates the whole group.

Encoding applicability depends on congruences of p:
  * Icart needs p = 2 (mod 3)  (cubing is a bijection).
  * SW needs sqrt(-3) in F_p, which holds iff p = 1 (mod 3), and the
    a = 0 curve shape y^2 = x^3 + b.
  * SWU needs a != 0, b != 0 and p = 3 (mod 4).
No prime supports Icart and SW at once, so two small primes are kept:
1019 = 2 (mod 3), 3 (mod 4) covers Icart and SWU; 1039 = 1 (mod 3),
3 (mod 4) covers SW.
"""

import sys


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def curve_points(p: int, a: int, b: int):
    sqrts = {}
    for y in range(p):
        sqrts.setdefault(y * y % p, []).append(y)
    pts = []
    for x in range(p):
        rhs = (x * x * x + a * x + b) % p
        for y in sqrts.get(rhs, []):
            pts.append((x, y))
    return pts


def order(p: int, a: int, b: int) -> int:
    n = 1  # the point at infinity
    for x in range(p):
        n += 1 + legendre(x * x * x + a * x + b, p)
    return n


def describe(p: int, a: int, b: int) -> None:
    if (4 * a * a * a + 27 * b * b) % p == 0:
        print(f"p={p} a={a} b={b}: singular, skipped")
        return
    n = order(p, a, b)
    if not is_prime(n):
        print(f"p={p} a={a} b={b}: #E={n} not prime, skipped")
        return
    pts = curve_points(p, a, b)
    assert len(pts) + 1 == n
    gx, gy = min(pts)
    print(f"p={p} a={a} b={b}: #E={n} prime; generator=({gx},{gy})")
    print(f"  p mod 3 = {p % 3}, p mod 4 = {p % 4}, "
          f"sqrt(-3) exists = {legendre(-3, p) == 1}")


def main() -> None:
    if len(sys.argv) == 4:
        describe(int(sys.argv[1]), int(sys.argv[2]), int(sys.argv[3]))
        return
    print("== p = 1019 (Icart + SWU), scanning a=1, b=1.. ==")
    found = 0
    b = 1
    while found < 4 and b < 60:
        if order(1019, 1, b) not in (0,) and is_prime(order(1019, 1, b)):
            describe(1019, 1, b)
            found += 1
        b += 1
    print("== p = 1039 (SW), scanning a=0, b=1.. ==")
    found = 0
    b = 1
    while found < 4 and b < 60:
        n = order(1039, 0, b)
        if is_prime(n):
            describe(1039, 0, b)
            found += 1
        b += 1


if __name__ == "__main__":
    main()
