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
from enum import Enum, auto, unique
from typing import Any, Dict, Type

from social_mae.config.config_object import ConfigObject
from social_mae.harness.command_base import CommandBase
from social_mae.harness.commands import AblateCmd, EvalCmd, FinetuneCmd, PretrainCmd, SynthCmd
from social_mae.logger.logger import Logger


#
# Enumerations
#

# Command types
@unique
class CommandTypes(Enum):
    SYNTH = auto()
    PRETRAIN = auto()
    FINETUNE = auto()
    EVAL = auto()
    ABLATE = auto()


#
# Classes
#

# Constant for command dispatcher class
class CommandDispatcherConst:
    # Command to class map
    CMD_TYPE_TO_CLASS: Dict[CommandTypes, Type[CommandBase]] = {
        CommandTypes.SYNTH: SynthCmd,
        CommandTypes.PRETRAIN: PretrainCmd,
        CommandTypes.FINETUNE: FinetuneCmd,
        CommandTypes.EVAL: EvalCmd,
        CommandTypes.ABLATE: AblateCmd,
    }


# Command dispatcher class
class CommandDispatcher:

    config: ConfigObject
    logger: Logger

    # Constructor
    def __init__(self,
                 config: ConfigObject,
                 logger: Logger) -> None:
        self.config = config
        self.logger = logger

    # Dispatch command
    def Dispatch(self,
                 cmd_type: CommandTypes,
                 **kwargs: Any) -> Any:
        if not isinstance(cmd_type, CommandTypes):
            raise TypeError("Command type is not an enumerative of CommandTypes")

        # Log
        self.logger.GetLogger().info(f"Dispatching command type: {cmd_type}")

        cmd_class = CommandDispatcherConst.CMD_TYPE_TO_CLASS[cmd_type](self.config, self.logger)
        return cmd_class.Execute(**kwargs)
