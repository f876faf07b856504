# Copyright (c) 2019, UofL Computer Systems Lab.
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without event the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.


from pwl.config.base import (
    ConfigAttribute,
    ConfigSectionBase
)
from pwl.settings import SettingsManager
from pwl.util import try_split


def _positive(x):
    return x >= 1


class BenchConfiguration(ConfigSectionBase):
    """Bench Configuration for the `bench` section of a config.

    The benchmark verifies one fixed unconditional plan on random systems
    with a growing number of behaviors, at fixed state count and horizon.
    """
    def __init__(self, name='bench'):
        super().__init__(name)

    def _get_settings(self):
        """Retrieves the ConfigAttributes for the configuration object.

        Returns:
            A dictionary mapping of setting names to ConfigAttributes.
        """
        return {
            'behaviors': ConfigAttribute(
                conversion_fn=lambda x: try_split(x, convert_type=int),
                validation_fn=lambda x: bool(x) and all(
                    1 <= s <= SettingsManager.get('max_behaviors') for s in x
                ),
                default_value=[16, 32, 64, 128, 256]
            ),
            'baseline': ConfigAttribute(
                conversion_fn=int,
                validation_fn=lambda x: x in self.behaviors,
                dependent_attributes=['behaviors'],
                default_value=16
            ),
            'states': ConfigAttribute(
                conversion_fn=int,
                validation_fn=lambda x: 1 <= x <= SettingsManager.get(
                    'max_states'),
                default_value=8
            ),
            'actions': ConfigAttribute(
                conversion_fn=int,
                validation_fn=_positive,
                default_value=4
            ),
            'horizon': ConfigAttribute(
                conversion_fn=int,
                validation_fn=lambda x: x >= 0,
                default_value=64
            ),
            'seed': ConfigAttribute(
                conversion_fn=int,
                validation_fn=lambda x: x >= 0,
                default_value=0
            ),
            'repetitions': ConfigAttribute(
                conversion_fn=int,
                validation_fn=_positive,
                default_value=3
            )
        }
