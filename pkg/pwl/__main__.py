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


import colorama
import signal
import sys

from pwl.cli import dispatch
from pwl.commands.common import EXIT_ERROR
from pwl.errors import PWLBaseException
from pwl.output import printf, PrintType


def sig_handler(signal, frame):
    """Signal handler for termination signals sent to main process.

    Args:
        signal: The signal.
        frame: The frame.
    """
    printf('Program encountered termination signal, aborting...',
           print_type=PrintType.ERROR | PrintType.ERROR_LOG)

    colorama.deinit()

    sys.exit(1)


def main(argv=None):
    """Runs the command line.

    Args:
        argv: The arguments. Defaults to `sys.argv[1:]`.

    Returns:
        0 on success, 1 on a negative result, 2 on a usage or validation
        error.
    """
    if argv is None:
        argv = sys.argv[1:]

    try:
        return dispatch(argv)
    except SystemExit as err:
        # argparse reports usage errors with code 2 and --help with 0.
        return 0 if err.code is None else err.code
    except PWLBaseException as err:
        printf('Program encountered critical error\n{}: {}'.format(
            err.__class__.__name__, err),
            print_type=PrintType.ERROR | PrintType.ERROR_LOG)
        return EXIT_ERROR
    except RecursionError:
        # Only rendering nested JSON (simulate --tree) can get this deep.
        printf('Program encountered critical error\nOutput is nested too '
               'deeply to render',
               print_type=PrintType.ERROR | PrintType.ERROR_LOG)
        return EXIT_ERROR


if __name__ == '__main__':
    signal.signal(signal.SIGTERM, sig_handler)  # Process termination
    signal.signal(signal.SIGINT, sig_handler)  # Keyboard interrupt

    colorama.init()

    sys.exit(main())
