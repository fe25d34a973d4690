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
import unittest
from unittest.mock import patch

from app.app_utils.telemetry import StructuredFormatter, setup_telemetry


def record(message):
    return logging.LogRecord("app.tools.descent", logging.INFO, __file__, 1, message, None, None)


class TestStructuredFormatter(unittest.TestCase):
    def test_tag_becomes_operation(self):
        entry = json.loads(StructuredFormatter().format(record("[gauge_classes] 16 descent data")))
        self.assertEqual(entry["operation"], "gauge_classes")
        self.assertEqual(entry["message"], "16 descent data")
        self.assertEqual(entry["severity"], "INFO")
        self.assertEqual(entry["logger"], "app.tools.descent")

    def test_untagged_message(self):
        entry = json.loads(StructuredFormatter().format(record("plain")))
        self.assertNotIn("operation", entry)
        self.assertEqual(entry["message"], "plain")


class TestSetupTelemetry(unittest.TestCase):
    def tearDown(self):
        root = logging.getLogger()
        for handler in list(root.handlers):
            root.removeHandler(handler)
        root.setLevel(logging.WARNING)

    @patch.dict(os.environ, {"DESC2_LOG_FORMAT": "json"})
    def test_json_format_from_environment(self):
        self.assertEqual(setup_telemetry(), "json")
        (handler,) = logging.getLogger().handlers
        self.assertIsInstance(handler.formatter, StructuredFormatter)

    @patch.dict(os.environ, {"DESC2_LOG_FORMAT": "yaml", "DESC2_LOG_LEVEL": "error"})
    def test_unknown_format_falls_back_to_text(self):
        self.assertEqual(setup_telemetry(), "text")
        self.assertEqual(logging.getLogger().level, logging.ERROR)

    def test_verbosity_overrides_level(self):
        setup_telemetry(verbosity=2)
        self.assertEqual(logging.getLogger().level, logging.DEBUG)
