import pytest

from pwl.domains import gen_intro_example
from pwl.settings import SettingsManager

from tests.helpers import intro_plan_table


@pytest.fixture(autouse=True)
def reset_settings():
    """Restores every SettingsManager attribute a test may change."""
    names = ('log_enabled', 'max_behaviors', 'max_states', 'silent',
             'workers')
    saved = {name: SettingsManager.get(name) for name in names}
    SettingsManager.set('silent', True)
    yield
    for name, value in saved.items():
        SettingsManager.set(name, value)


@pytest.fixture
def intro():
    return gen_intro_example()


@pytest.fixture
def intro_plan():
    return intro_plan_table()
