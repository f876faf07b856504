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


import os
import re

from pwl.errors import (
    InvalidSettingError,
    UndefinedConstantError,
    UndefinedFormatterError,
    UndefinedRegexError
)
from pwl.util import cast_int


_CONSTANTS = {
    'bench_header': 'bench',
    'dead_state': 'dead',
    'default_max_behaviors': 4096,
    'default_max_states': 65536,
    'history_separator': '|',
    'ma_max_actions': 4,
    'ma_max_behaviors': 64,
    'ma_max_goals': 8,
    'ma_max_horizon': 3,
    'ma_max_initials': 8,
    'ma_max_states': 16,
    'ma_plan_cap': 5000,
    'observe_action': 'observe_goal',
    'reduced_goal_name': 'goal',
    'sat_oracle_max_variables': 25,
    'transport_max_behaviors': 1024
}

_FORMATTERS = {
    'cnf_behavior': 'E{}_{}',  # variable, bit
    'cnf_clause_action': 'a{}',  # satisfying assignment index
    'cnf_state': 'q{}',  # row
    'random_action': 'a{}',
    'random_behavior': 'E{}',
    'random_state': 'q{}',
    'reduced_behavior': '{}@{}@{}',  # behavior, goal 1, goal 2
    'reduced_fail': 'fail{}',  # agent
    'reduced_goal': '{}@goal',  # state
    'reduced_observe': '{}@observe:{}',  # state, goal name
    'reduced_start': '{}@start',  # state
    'transport_behavior': 'routes{}'  # combination index
}

_REGEX = {
    'dimacs_header': re.compile(r'^p\s+cnf\s+(\d+)\s+(\d+)\s*$')
}


def _env_int(name, default):
    value = cast_int(os.environ.get(name))
    if value is None or value < 1:
        return default
    return value


class SettingsManager:
    """Controls settings set by command-line arguments and the environment."""
    log_enabled = False
    max_behaviors = _env_int('PWL_MAX_BEHAVIORS',
                             _CONSTANTS['default_max_behaviors'])
    max_states = _env_int('PWL_MAX_STATES', _CONSTANTS['default_max_states'])
    silent = False
    workers = 1

    @staticmethod
    def get(*settings):
        """Retrieves attributes on self.

        Args:
            settings: The attributes to retrieve.

        Returns:
            The values of the attributes on self.

        Raises:
            InvalidSettingError: If setting does not exist on self.
        """
        ret = []
        for setting in settings:
            try:
                ret.append(getattr(SettingsManager, setting))
            except AttributeError:
                raise InvalidSettingError('{} does not exist'.format(setting))

        if len(ret) == 1:
            return ret[0]
        return ret

    @staticmethod
    def set(setting, value):
        """Sets an attribute on self.

        Args:
            setting: The attribute to set.
            value: The value to set the attribute to.
        """
        setattr(SettingsManager, setting, value)


def get_constant(name):
    """Retrieves a constant.

    Args:
        name: The name of the constant.

    Returns:
        The constant.

    Raises:
        UndefinedConstantError: If constant is not defined.
    """
    if name not in _CONSTANTS:
        raise UndefinedConstantError(
            'Constant {} is not defined'.format(name)
        )

    return _CONSTANTS[name]


def get_formatter(name):
    """Retrieves a formatter.

    Args:
        name: The name of the formatter.

    Returns:
        The formatter.

    Raises:
        UndefinedFormatterError: If formatter is not defined.
    """
    if name not in _FORMATTERS:
        raise UndefinedFormatterError(
            'Formatter {} is not defined'.format(name)
        )

    return _FORMATTERS[name]


def match_regex(string, regex_name):
    """Returns the captured groups of a regex matched against the string.

    Args:
        string: The string to search.
        regex_name: The name of the regex to match on.

    Returns:
        Tuple of captured groups or None if there isn't a match.

    Raises:
        UndefinedRegexError: If `regex_name` isn't a defined regex.
    """
    if regex_name not in _REGEX:
        raise UndefinedRegexError('regex {} is not defined'.format(regex_name))

    regex = _REGEX[regex_name]
    match = regex.match(string)

    if not match:
        return None

    return match.groups()
