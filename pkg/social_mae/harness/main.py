# Copyright (c) 2026 The social_mae developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.


#
# Imports
#
import sys
from typing import List, Optional

import torch

from social_mae.config.config_file_sections_loader import ConfigFileSectionsLoader
from social_mae.config.config_loader_ex import (
    ConfigFieldNotExistentError, ConfigFieldValueError, ConfigFileNotReadableError
)
from social_mae.experiment.experiment_config import ExperimentConfig
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.harness.arguments_parser import ArgumentsParser
from social_mae.harness.command_dispatcher import CommandDispatcher, CommandTypes
from social_mae.harness.experiment_paths import ExperimentPaths
from social_mae.logger.logger import Logger
from social_mae.utils.thread_cap import ThreadCap


#
# Functions
#

# Entry point, return the process exit status
def main(argv: Optional[List[str]] = None) -> int:
    args = ArgumentsParser().Parse(argv)

    try:
        config, report = ConfigFileSectionsLoader.Load(args.config, ExperimentConfig)
    except (ConfigFieldNotExistentError, ConfigFieldValueError, ConfigFileNotReadableError) as ex:
        Logger.Quiet().GetLogger().error(f"Invalid configuration: {ex}")
        return 2

    if args.seed is not None:
        if args.seed < 0:
            Logger.Quiet().GetLogger().error(f"Seed shall be non-negative, got {args.seed}")
            return 2
        config.SetValue(ExperimentConfigTypes.SEED, args.seed)
    if args.out is not None:
        config.SetValue(ExperimentConfigTypes.OUTPUT_DIR, args.out)
    ExperimentPaths.Resolve(config)

    logger = Logger(config)
    for section, name, value in report:
        logger.GetLogger().debug(f"[{section}] {name} = {value}")

    try:
        torch.set_num_threads(ThreadCap.Get())
    except ValueError as ex:
        logger.GetLogger().error(str(ex))
        return 2

    try:
        CommandDispatcher(config, logger).Dispatch(CommandTypes[args.command.upper()],
                                                   resume=args.resume,
                                                   checkpoint=args.checkpoint,
                                                   from_scratch=args.from_scratch,
                                                   verify=args.verify,
                                                   axis=args.axis,
                                                   values=args.values)
    except Exception:
        # Already logged by the command
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
