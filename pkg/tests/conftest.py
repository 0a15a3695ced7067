import pytest

from wallcross.quiver import (MutationState, Quiver, build_algebra,
                              truncated_mutation, verify_dual_pairing)


def _run_flow(fixture, D, steps=2):
    q = Quiver.from_fixture(fixture)
    A = build_algebra(q, D)
    state = MutationState(A)
    reports, verdicts = [], []
    for _ in range(steps):
        reports.append(truncated_mutation(state))
        verdicts.append(verify_dual_pairing(state))
    return {"quiver": q, "algebra": A, "state": state,
            "reports": reports, "verify": verdicts}


@pytest.fixture(scope="session")
def perv_flow():
    return _run_flow("quiver_perv_p2.json", 4)


@pytest.fixture(scope="session")
def tstar_flow():
    cache = {}

    def get(D):
        if D not in cache:
            cache[D] = _run_flow("quiver_t_star_p2.json", D)
        return cache[D]

    return get
