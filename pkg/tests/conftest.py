import pytest

import freebound as fb


@pytest.fixture(scope="session")
def logistic_n():
    return fb.logistic()


@pytest.fixture(scope="session")
def lstar_05(logistic_n):
    return fb.critical_length(0.5, 1.0, 0.0, logistic_n.fp0)


@pytest.fixture(scope="session")
def speed_05_2(logistic_n):
    return fb.spreading_speed(0.5, 2.0, logistic_n)


@pytest.fixture(scope="session")
def beta_star_1(logistic_n):
    return fb.critical_advection(1.0, logistic_n)


@pytest.fixture(scope="session")
def spreading_run(logistic_n, lstar_05):
    """Long spreading run used by the speed-law and profile criteria:
    logistic, beta=0.5, a=1, b=0, mu=2, h0=l_star+1, nx=800, tmax=80."""
    spec = fb.ProblemSpec(beta=0.5, mu=2.0, a=1.0, b=0.0, h0=lstar_05 + 1.0,
                          nonlinearity=logistic_n, nx=800, tmax=80.0)
    traj = fb.simulate(spec, snapshot_times=(60.0, 70.0, 80.0))
    return spec, traj


@pytest.fixture(scope="session")
def neumann_run(logistic_n):
    """No-flux variant (a=0, b=1) of the spreading run."""
    lstar = fb.critical_length(0.5, 0.0, 1.0, logistic_n.fp0)
    spec = fb.ProblemSpec(beta=0.5, mu=2.0, a=0.0, b=1.0, h0=lstar + 1.0,
                          nonlinearity=logistic_n, nx=800, tmax=80.0)
    traj = fb.simulate(spec, snapshot_times=(60.0, 70.0, 80.0))
    return spec, traj
