def ilog2p1(x: int) -> int:
    """floor(log2 x) + 1, with ilog2p1(0) = 0."""
    if x < 0:
        raise ValueError(f"ilog2p1 needs x >= 0: {x}")
    return x.bit_length()


def iroot(x: int, k: int) -> int:
    """Exact floor of the k-th root of x."""
    if k < 1:
        raise ValueError(f"Root index must be >= 1: {k}")
    if x < 0:
        raise ValueError(f"iroot needs x >= 0: {x}")
    if x < 2 or k == 1:
        return x

    # Newton iteration from an overestimate, decreasing to the floor root
    y = 1 << -(-x.bit_length() // k)
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            return y
        y = z


def isqrt(x: int) -> int:
    return iroot(x, 2)


def sci_digest(x: int, digits: int = 12) -> str:
    """Leading digits and bit length of a large natural number."""
    s = str(x)
    if len(s) <= digits:
        return f"{s} ({x.bit_length()} bits)"
    return f"{s[0]}.{s[1:digits]}e{len(s) - 1} ({x.bit_length()} bits)"
