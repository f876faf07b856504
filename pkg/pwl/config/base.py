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


from abc import ABC, abstractmethod

from pwl.errors import InvalidSettingError
from pwl.output import printf, PrintType


class ConfigAttribute:
    """Attribute properties for configurations.

    Args:
        conversion_fn: Function to convert the string representation into
            another type.
        validation_fn: Function to validate the value of the setting.
        dependent_attributes: Other attributes which this is dependent on.
        default_value: Default value if none explicitly assigned.
    """
    def __init__(self, conversion_fn=lambda x: str(x),
                 validation_fn=lambda x: True,
                 dependent_attributes=None,
                 default_value=None):
        self.conversion_fn = conversion_fn
        self.validation_fn = validation_fn
        self.dependent_attributes = dependent_attributes
        self.default_value = default_value
        self.default_used = False


class ConfigSectionBase(ABC):
    """Base class for configuration sections.

    Args:
        name: The section name.
    """
    def __init__(self, name):
        self.name = name
        self._settings = self._get_settings()

    def add_setting(self, setting, value):
        """Adds a setting to the configuration object.

        Args:
            setting: The setting.
            value: The string value.

        Raises:
            InvalidSettingError: If the setting is unknown or its value does
                not convert.
        """
        if setting not in self._settings:
            raise InvalidSettingError(
                'Setting {} is not valid in section {}'.format(setting,
                                                               self.name)
            )

        sa = self._settings[setting]
        try:
            converted = sa.conversion_fn(value)
        except (TypeError, ValueError):
            raise InvalidSettingError(
                'Setting {}={} is not valid'.format(setting, value)
            )

        setattr(self, setting, converted)

    @abstractmethod
    def _get_settings(self):
        """Retrieves the ConfigAttributes for the configuration object.

        Returns:
            A dictionary mapping of setting names to ConfigAttributes.
        """

    def validate(self):
        """Validates the settings, dependencies first.

        Raises:
            InvalidSettingError: If settings are not valid or dependencies
                not met.
        """
        printf('Validating section {}'.format(self.name),
               print_type=PrintType.DEBUG_LOG)

        # NOTE: Assumes that there are no circular dependencies
        pending = {
            k: set(v.dependent_attributes or ())
            for k, v in self._settings.items()
        }
        unknown = {d for deps in pending.values() for d in deps} \
            - set(self._settings)
        if unknown:
            raise InvalidSettingError(
                'Setting(s) {} do not have dependencies met'
                .format(', '.join(sorted(unknown)))
            )

        while pending:
            ready = sorted(k for k, deps in pending.items() if not deps)
            if not ready:
                raise InvalidSettingError(
                    'Setting(s) {} do not have dependencies met'
                    .format(', '.join(sorted(pending)))
                )

            for setting_name in ready:
                self._validate_setting(setting_name,
                                       self._settings[setting_name])
                del pending[setting_name]
                for deps in pending.values():
                    deps.discard(setting_name)

    def _validate_setting(self, setting_name, setting):
        """Validates a config setting attribute.

        Args:
            setting_name: The attribute.
            setting: The ConfigAttribute.

        Raises:
            InvalidSettingError: If no value set and `default_value` not set on
                `setting`. Or if fails `validate_fn` on `setting`.
        """
        setting_value = getattr(self, setting_name, None)
        if setting_value is None:
            if setting.default_value is None:
                raise InvalidSettingError(
                    'Required setting {} is not defined'.format(setting_name)
                )

            setting_value = setting.default_value
            setting.default_used = True
            setattr(self, setting_name, setting.default_value)

        if not setting.validation_fn(setting_value):
            raise InvalidSettingError(
                'Setting {}={} is not valid'.format(setting_name, setting_value)
            )
