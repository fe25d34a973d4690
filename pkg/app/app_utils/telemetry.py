# Copyright 2026 The desc2gpd Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import logging
import os
import re

_TAG = re.compile(r"^\[(?P<tag>[^\]]+)\]\s*(?P<message>.*)$", re.DOTALL)


class StructuredFormatter(logging.Formatter):
    """One JSON record per line; a leading `[tag]` becomes the `operation` field."""

    def format(self, record: logging.LogRecord) -> str:
        message = record.getMessage()
        entry = {"severity": record.levelname, "logger": record.name, "message": message}
        match = _TAG.match(message)
        if match:
            entry["operation"] = match.group("tag")
            entry["message"] = match.group("message")
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, ensure_ascii=False)


def setup_telemetry(verbosity: int = 0) -> str:
    """Configure the root logger for a command-line run.

    The level comes from `verbosity` (1 = INFO, 2 = DEBUG) or else from
    DESC2_LOG_LEVEL (default WARNING); DESC2_LOG_FORMAT selects `text` or `json`.

    Returns:
        The format in use.
    """
    if verbosity >= 2:
        level = "DEBUG"
    elif verbosity == 1:
        level = "INFO"
    else:
        level = os.environ.get("DESC2_LOG_LEVEL", "WARNING").upper()
    log_format = os.environ.get("DESC2_LOG_FORMAT", "text").lower()

    handler = logging.StreamHandler()
    if log_format == "json":
        handler.setFormatter(StructuredFormatter())
    else:
        log_format = "text"
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(getattr(logging, level, logging.WARNING))
    logging.debug(f"[telemetry] logging at {level} in {log_format} format")
    return log_format
