"""Small helpers for vertex sets encoded as Python ints."""


def bits(mask):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def to_set(mask):
    return frozenset(bits(mask))


def lowest(mask):
    return (mask & -mask).bit_length() - 1


def popcount(mask):
    return mask.bit_count()
