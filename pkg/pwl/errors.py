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


class PWLBaseException(Exception):
    """Base Exception for PWL"""


class CapExceededError(PWLBaseException):
    """Cap Exceeded Error"""


class InvalidSettingError(PWLBaseException):
    """Invalid Setting Error"""


class NotSatisfactoryError(PWLBaseException):
    """Not Satisfactory Error"""


class ParseError(PWLBaseException):
    """Parse Error"""


class RestrictionUnsatisfiedError(PWLBaseException):
    """Restriction Unsatisfied Error"""


class SizeLimitError(PWLBaseException):
    """Size Limit Error"""


class UndefinedCommandError(PWLBaseException):
    """Undefined Command Error"""


class UndefinedConstantError(PWLBaseException):
    """Undefined Constant Error"""


class UndefinedFormatterError(PWLBaseException):
    """Undefined Formatter Error"""


class UndefinedRegexError(PWLBaseException):
    """Undefined Regex Error"""


class ValidationError(PWLBaseException):
    """Validation Error"""
