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


__title__ = 'pwl'
__summary__ = 'Planning while Learning toolkit'
__version__ = '0.1.0'

__author__ = 'UofL Computer Systems Lab'

__license__ = 'GNU General Public License v2 (GPLv2)'
__copyright__ = 'Copyright (c) 2019, UofL Computer Systems Lab.'
