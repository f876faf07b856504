import pytest

from pwl.config.base import ConfigAttribute, ConfigSectionBase
from pwl.config.bench import BenchConfiguration
from pwl.errors import InvalidSettingError
from pwl.settings import SettingsManager


class _Chained(ConfigSectionBase):
    """Three settings where each depends on the previous one."""
    def _get_settings(self):
        return {
            'low': ConfigAttribute(conversion_fn=int, default_value=1),
            'mid': ConfigAttribute(
                conversion_fn=int,
                validation_fn=lambda x: x > self.low,
                dependent_attributes=['low'],
                default_value=5
            ),
            'high': ConfigAttribute(
                conversion_fn=int,
                validation_fn=lambda x: x > self.mid,
                dependent_attributes=['mid']
            )
        }


def test_bench_defaults():
    config = BenchConfiguration()
    config.validate()

    assert config.behaviors == [16, 32, 64, 128, 256]
    assert config.baseline == 16
    assert (config.states, config.actions, config.horizon) == (8, 4, 64)
    assert (config.seed, config.repetitions) == (0, 3)


def test_bench_behaviors_respect_cap():
    SettingsManager.set('max_behaviors', 10)
    config = BenchConfiguration()
    config.add_setting('behaviors', '4, 20')
    config.add_setting('baseline', '4')
    with pytest.raises(InvalidSettingError):
        config.validate()


@pytest.mark.parametrize('setting, value', [
    ('repetitions', '0'),
    ('horizon', '-1'),
    ('states', '0'),
    ('actions', '0')
])
def test_bench_rejects(setting, value):
    config = BenchConfiguration()
    config.add_setting(setting, value)
    with pytest.raises(InvalidSettingError):
        config.validate()


def test_dependencies_validate_first():
    config = _Chained('chained')
    config.add_setting('high', '9')
    config.validate()

    assert (config.low, config.mid, config.high) == (1, 5, 9)


def test_dependent_validation_fails():
    config = _Chained('chained')
    config.add_setting('high', '3')
    with pytest.raises(InvalidSettingError):
        config.validate()


def test_required_setting():
    with pytest.raises(InvalidSettingError, match='high'):
        _Chained('chained').validate()


def test_unknown_and_unconvertible_settings():
    config = _Chained('chained')
    with pytest.raises(InvalidSettingError):
        config.add_setting('width', '1')
    with pytest.raises(InvalidSettingError):
        config.add_setting('low', 'one')
