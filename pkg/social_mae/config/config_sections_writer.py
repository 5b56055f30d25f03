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
import io
from typing import Any

from social_mae.config.config_object import ConfigObject
from social_mae.config.config_typing import ConfigFieldType, ConfigSectionsType


#
# Classes
#

# Configuration sections writer class.
# Loading the written text with the same sections gives back the same values.
# Unset fields, None values and empty lists are left out, loading restores their defaults.
class ConfigSectionsWriter:
    # Write to file
    @staticmethod
    def Save(file_name: str,
             config_obj: ConfigObject,
             sections: ConfigSectionsType) -> None:
        with open(file_name, "w", encoding="utf-8") as fout:
            fout.write(ConfigSectionsWriter.ToString(config_obj, sections))

    # Write to string
    @staticmethod
    def ToString(config_obj: ConfigObject,
                 sections: ConfigSectionsType) -> str:
        # Interpolation is disabled, values may contain '%'
        config_parser = configparser.ConfigParser(interpolation=None)

        # For each section
        for section_name, section in sections.items():
            config_parser.add_section(section_name)
            # For each field
            for field in section:
                if not config_obj.IsValueSet(field["type"]):
                    continue
                value = config_obj.GetValue(field["type"])
                # Skip values without a textual form
                if value is None or value == []:
                    continue
                config_parser.set(section_name, field["name"], ConfigSectionsWriter.__FieldValueToString(field, value))

        out = io.StringIO()
        config_parser.write(out)
        return out.getvalue()

    # Convert field value to string
    @staticmethod
    def __FieldValueToString(field: ConfigFieldType,
                             value: Any) -> str:
        return str(field["print_fct"](value)) if "print_fct" in field else str(value)
