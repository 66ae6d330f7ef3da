"""Recover the quadratic-form x of p = x^2 + y^2 from a single binomial mod p.

For p = 1 (mod 4) write p = x^2 + y^2 with x = 1 (mod 4) (the sign of x is
part of the normalization, so x may be negative).  Gauss' congruence says

    C((p-1)/2, (p-1)/4) = 2x  (mod p)

so the binomial alone pins x down mod p, and the normalization plus |x| <
sqrt(p) pins it down exactly.  Mod p^2 the same binomial equals
(2^(p-1)+1)/2 * (2x - p/(2x)), which this script inverts to recover x a
second way; both recoveries are compared with the value Cornacchia's
algorithm produces directly.
"""

from math import comb

from binomsums import check, mod_inverse, primes_in_range, represent


def recover_x_mod_p(p: int) -> int:
    """x from C((p-1)/2,(p-1)/4) mod p, using |2x| < p and x = 1 (mod 4)."""
    value = comb((p - 1) // 2, (p - 1) // 4) % p
    t = value if value <= p // 2 else value - p  # centered representative 2x
    x = t // 2
    return x if x % 4 == 1 else -x


def recover_x_mod_p2(p: int) -> int:
    """x from the same binomial mod p^2."""
    p2 = p * p
    v = comb((p - 1) // 2, (p - 1) // 4) % p2
    # peel off the Fermat-quotient factor, leaving t = 2x - p/(2x) (mod p^2)
    factor = (pow(2, p - 1, p2) + 1) * mod_inverse(2, p2) % p2
    t = v * mod_inverse(factor, p2) % p2
    # add back p/(2x); only the mod-p inverse of 2x matters at this precision
    x0 = recover_x_mod_p(p)
    t = (t + p * mod_inverse(2 * x0 % p, p)) % p2
    t = t if t <= p2 // 2 else t - p2  # now t is the integer 2x, |2x| < p
    return t // 2


def main():
    print(f"{'p':>6} {'x':>5} {'y':>5}   binomial mod p -> x   mod p^2 -> x   row")
    for p in primes_in_range(5, 200):
        rep = represent(p, 1)
        if rep is None:
            continue
        x1 = recover_x_mod_p(p)
        x2 = recover_x_mod_p2(p)
        row = check("CG", p)
        print(
            f"{p:>6} {rep.x:>5} {rep.y:>5}   {x1:>19}   {x2:>12}   "
            f"CG {row.status} (lhs={row.lhs}, rhs={row.rhs})"
        )
        assert x1 == rep.x and x2 == rep.x
    print("\nevery recovered x matches Cornacchia's representation")


if __name__ == "__main__":
    main()
