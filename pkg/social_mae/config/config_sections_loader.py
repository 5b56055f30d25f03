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

from social_mae.config.config_object import ConfigObject
from social_mae.config.config_section_loader import ConfigSectionLoader
from social_mae.config.config_typing import ConfigLoadReportType, ConfigSectionsType


#
# Classes
#

# Configuration sections loader class
class ConfigSectionsLoader:

    config_section_loader: ConfigSectionLoader

    # Constructor
    def __init__(self,
                 config_parser: configparser.ConfigParser) -> None:
        self.config_section_loader = ConfigSectionLoader(config_parser)

    # Load sections
    def LoadSections(self,
                     sections: ConfigSectionsType,
                     raw_text: str) -> Tuple[ConfigObject, ConfigLoadReportType]:
        config_obj = ConfigObject(raw_text)
        report: ConfigLoadReportType = []

        # For each section
        for section_name, section in sections.items():
            # Load fields
            self.config_section_loader.LoadSection(config_obj, section_name, section, report)

        return config_obj, report
