import pytest

from pregarside.config import get_cfg_defaults
from pregarside.frontend.decision import Session
from pregarside.frontend.preset import PRESETS, load_preset


@pytest.fixture(scope='session')
def cfg():
    cfg = get_cfg_defaults()
    cfg.freeze()
    return cfg


@pytest.fixture(scope='session')
def sessions(cfg):
    return {name: Session(load_preset(name), cfg) for name in PRESETS}


@pytest.fixture(scope='session')
def b3(sessions):
    return sessions['B3']


@pytest.fixture(scope='session')
def b4(sessions):
    return sessions['B4']


@pytest.fixture(scope='session')
def b3b3(sessions):
    return sessions['B3B3']


@pytest.fixture(scope='session')
def ra2(sessions):
    return sessions['RA2']


@pytest.fixture(scope='session')
def free2(sessions):
    return sessions['FREE2']


@pytest.fixture(scope='session')
def b3_leaf(b3):
    return b3.catalog.structure(('a', 'b'))
