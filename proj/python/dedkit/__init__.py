# Copyright 2026 The dedkit Authors. All Rights Reserved.
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
# ==============================================================================
"""Python bindings for dedkit.

Godel numbers cross the boundary as strings: decimal digits, or
``seq:e1,e2,...`` for numbers too large to write out.
"""

from dedkit._dedkit import (
    Deduction,
    DedkitError,
    Formula,
    Signature,
    check_entailment,
    concat,
    decode_formula,
    decode_sequence,
    discharge,
    encode_deduction,
    encode_formula,
    implies,
    move_hypothesis_to_end,
    parse_formula,
    parse_script,
    proof_check,
    run_cli,
    search,
    self_implication,
    transport_discharge,
    transport_weaken,
    undischarge,
    verify,
    weaken,
)

__all__ = [
    "Deduction",
    "DedkitError",
    "Formula",
    "Signature",
    "check_entailment",
    "concat",
    "decode_formula",
    "decode_sequence",
    "discharge",
    "encode_deduction",
    "encode_formula",
    "godel_int",
    "implies",
    "move_hypothesis_to_end",
    "parse_formula",
    "parse_script",
    "proof_check",
    "run_cli",
    "search",
    "self_implication",
    "transport_discharge",
    "transport_weaken",
    "undischarge",
    "verify",
    "weaken",
]


def godel_int(text):
    """Returns a Godel number string as a Python int (decimal form only)."""
    if text.startswith("seq:"):
        raise ValueError("number is only available in factored form")
    return int(text)
