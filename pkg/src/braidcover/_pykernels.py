"""Pure-Python reference kernels.

These mirror ``_ckernels.pyx`` function for function. All arithmetic is on
Python ints (or, for :func:`berkowitz`, on arbitrary ring elements), so no
result is ever truncated.
"""


def apply_twists(rows, letters):
    """Right-multiply ``rows`` in place by the transvection of each letter.

    Letter ``j`` (1-based, sign = direction) multiplies by ``I + sign * J_j``
    where row ``j`` of ``J_j`` holds +1 in column ``j-1`` and -1 in column
    ``j+1``. On columns that is ``col[j-1] += s*col[j]`` and
    ``col[j+1] -= s*col[j]``.
    """
    rank = len(rows)
    for letter in letters:
        if letter > 0:
            j, s = letter - 1, 1
        else:
            j, s = -letter - 1, -1
        left = j > 0
        right = j < rank - 1
        for row in rows:
            x = row[j]
            if not x:
                continue
            if s < 0:
                x = -x
            if left:
                row[j - 1] += x
            if right:
                row[j + 1] -= x
    return rows


def bareiss_det(rows):
    """Exact integer determinant by fraction-free elimination (copies input)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def berkowitz(rows, zero, one):
    """Coefficients of det(tI - A), highest degree first.

    Division free, so it works over any commutative ring whose elements
    support ``+``, ``-`` and ``*``.
    """
    n = len(rows)
    coeffs = [one]
    for r in range(n):
        row_part = rows[r][:r]
        vec = [rows[i][r] for i in range(r)]
        q = [one, -rows[r][r]]
        for k in range(r):
            acc = zero
            for x, y in zip(row_part, vec):
                acc = acc + x * y
            q.append(-acc)
            if k < r - 1:
                new_vec = []
                for i in range(r):
                    row_i = rows[i]
                    acc = zero
                    for c in range(r):
                        acc = acc + row_i[c] * vec[c]
                    new_vec.append(acc)
                vec = new_vec
        new_coeffs = []
        for i in range(r + 2):
            acc = zero
            for j in range(max(0, i - r - 1), min(i, r) + 1):
                acc = acc + q[i - j] * coeffs[j]
            new_coeffs.append(acc)
        coeffs = new_coeffs
    return coeffs


def poly_mul(a, b):
    """Dense convolution of two integer coefficient sequences."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out
