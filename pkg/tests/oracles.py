"""Independent reference implementations used to cross-check the kernel.

Everything here is deliberately naive: a recursive-descent reader of the
flat encoding, tree-recursive folds over the trees it produces, a
materialized-stack rerun of the machine, and brute-force enumeration /
factorization.  Only ever run on small inputs.
"""

from ualgebra.oplist import UNDERFLOW, Error, Ok


def read_one(signature, ops, start):
    """Recursive-descent read of one prefix-notation term from ops[start:].

    Returns (tree, next_index) with tree = (symbol_index, children_tuple),
    or None if no complete term starts there.
    """
    if start >= len(ops):
        return None
    op = ops[start]
    children = []
    i = start + 1
    for _ in range(signature.arity(op)):
        parsed = read_one(signature, ops, i)
        if parsed is None:
            return None
        child, i = parsed
        children.append(child)
    return (op, tuple(children)), i


def term_count(signature, ops):
    """How many complete terms ops encodes, or None when it is no valid
    sequence of terms."""
    i = 0
    count = 0
    while i < len(ops):
        parsed = read_one(signature, ops, i)
        if parsed is None:
            return None
        _, i = parsed
        count += 1
    return count


def oracle_is_term(signature, ops):
    return term_count(signature, ops) == 1


def status_by_stack(signature, ops):
    """The machine rerun with a materialized stack of trees instead of a
    counter; same Status values, found independently."""
    stack = []
    for i in range(len(ops) - 1, -1, -1):
        arity = signature.arity(ops[i])
        if len(stack) < arity:
            return Error(UNDERFLOW, i)
        children = tuple(stack.pop() for _ in range(arity))
        stack.append((ops[i], children))
    return Ok(len(stack))


def tree_of(signature, ops):
    parsed = read_one(signature, ops, 0)
    assert parsed is not None and parsed[1] == len(ops)
    return parsed[0]


def tree_fold(signature, step, tree):
    op, children = tree
    return step(
        signature.symbols[op], [tree_fold(signature, step, c) for c in children]
    )


def tree_depth(signature, tree):
    op, children = tree
    return 1 + max((tree_depth(signature, c) for c in children), default=0)


def tree_eval(algebra, tree):
    op, children = tree
    values = [tree_eval(algebra, c) for c in children]
    return algebra.apply(algebra.signature.symbols[op], values)


def all_oplists(signature, max_len):
    """Every index sequence of length <= max_len, shortest first."""
    n = len(signature)
    for length in range(max_len + 1):
        for ops in _sequences(n, length):
            yield ops


def _sequences(n, length):
    if length == 0:
        yield ()
        return
    for rest in _sequences(n, length - 1):
        for op in range(n):
            yield rest + (op,)


def enumerate_by_filter(signature, max_len):
    """Brute-force enumeration: filter every oplist through the oracle
    validity check, in length-then-lexicographic order."""
    found = []
    for length in range(1, max_len + 1):
        batch = [
            ops
            for ops in sorted(_sequences(len(signature), length))
            if oracle_is_term(signature, ops)
        ]
        found.extend(batch)
    return found


def brute_force_splits(signature, ops, n):
    """All ways to cut ops into n contiguous pieces that are each a term."""
    results = []

    def go(start, pieces):
        if len(pieces) == n:
            if start == len(ops):
                results.append(list(pieces))
            return
        for end in range(start + 1, len(ops) + 1):
            if oracle_is_term(signature, ops[start:end]):
                go(end, pieces + [ops[start:end]])

    go(0, [])
    return results
