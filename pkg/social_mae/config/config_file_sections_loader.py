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
import configparser
from typing import Tuple

from social_mae.config.config_loader_ex import ConfigFileNotReadableError
from social_mae.config.config_object import ConfigObject
from social_mae.config.config_sections_loader import ConfigSectionsLoader
from social_mae.config.config_typing import ConfigLoadReportType, ConfigSectionsType


#
# Classes
#

# Configuration file sections loader class
class ConfigFileSectionsLoader:
    # Load from file
    @staticmethod
    def Load(file_name: str,
             sections: ConfigSectionsType) -> Tuple[ConfigObject, ConfigLoadReportType]:
        # Read file
        try:
            with open(file_name, "r", encoding="utf-8") as fin:
                raw_text = fin.read()
        except OSError as ex:
            raise ConfigFileNotReadableError(f"Configuration file {file_name} cannot be read") from ex

        return ConfigFileSectionsLoader.LoadString(raw_text, sections)

    # Load from string
    @staticmethod
    def LoadString(raw_text: str,
                   sections: ConfigSectionsType) -> Tuple[ConfigObject, ConfigLoadReportType]:
        # Interpolation is disabled, values may contain '%'
        config_parser = configparser.ConfigParser(interpolation=None)
        config_parser.read_string(raw_text)

        # Load sections
        return ConfigSectionsLoader(config_parser).LoadSections(sections, raw_text)
