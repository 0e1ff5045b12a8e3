import pytest


def reference_replace(s, pattern, replacement):
    """Character-level left-to-right scanner; independent of str.replace."""
    out = []
    i = 0
    n = len(pattern)
    while i < len(s):
        if s[i:i + n] == pattern:
            out.append(replacement)
            i += n
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


def reference_apply(pairs, s):
    for ell, r in pairs:
        s = reference_replace(s, "1" * ell, "1" * r)
    return s


@pytest.fixture
def ref_replace():
    return reference_replace
