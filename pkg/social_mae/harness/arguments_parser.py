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
import argparse
from typing import List, Optional

from social_mae.experiment.experiment_config import AblationAxisConverter
from social_mae.utils.utils import Utils


#
# Variables
#

# Default configuration file
DEF_CONFIG_FILE = "conf/config.ini"


#
# Classes
#

# Argument parser
class ArgumentsParser:

    parser: argparse.ArgumentParser

    # Constructor
    def __init__(self) -> None:
        self.parser = argparse.ArgumentParser(prog="socialmae")
        self.parser.add_argument(
            "command",
            choices=["synth", "pretrain", "finetune", "eval", "ablate"],
            help="command to run"
        )
        self.parser.add_argument(
            "-c", "--config",
            type=str,
            default=DEF_CONFIG_FILE,
            help="configuration file"
        )
        self.parser.add_argument(
            "--seed",
            type=int,
            default=None,
            help="seed, overrides the configuration"
        )
        self.parser.add_argument(
            "--out",
            type=str,
            default=None,
            help="output directory, overrides the configuration"
        )
        self.parser.add_argument(
            "--resume",
            type=str,
            default=None,
            help="checkpoint to resume training from (pretrain, finetune)"
        )
        self.parser.add_argument(
            "--checkpoint",
            type=str,
            default=None,
            help="checkpoint to fine-tune from (finetune) or to evaluate (eval)"
        )
        self.parser.add_argument(
            "--from-scratch",
            action="store_true",
            help="fine-tune with a randomly initialized encoder (finetune)"
        )
        self.parser.add_argument(
            "--verify",
            action="store_true",
            help="verify the dataset against its manifest (synth)"
        )
        self.parser.add_argument(
            "--axis",
            type=AblationAxisConverter.KeyToValue,
            default=None,
            help="ablation axis: mask_ratio, dec_layers, data_fraction or finetune_fraction (ablate)"
        )
        self.parser.add_argument(
            "--values",
            type=Utils.StrToFloatList,
            default=None,
            help="comma-separated ablation values (ablate)"
        )

    # Parse arguments
    def Parse(self,
              argv: Optional[List[str]] = None) -> argparse.Namespace:
        return self.parser.parse_args(argv)
