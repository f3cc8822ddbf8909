#!/usr/bin/env python3
"""Regenerate include/mmtd/detail/bundled_case_data.hpp from data/*.m."""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
CASES = [("bus3", "bus3.m"), ("bus6", "case6ww.m"), ("bus14", "case14.m"),
         ("bus39", "case39.m"), ("bus57", "case57.m"), ("bus118", "case118.m")]

out = ["// Generated by scripts/embed_cases.py from data/*.m. Do not edit.",
       "#pragma once", "", "#include <array>", "#include <string_view>", "",
       "namespace mmtd::detail {", "",
       "struct BundledCaseText {", "  std::string_view name;",
       "  std::string_view source_file;", "  std::string_view text;", "};", ""]
for name, fn in CASES:
    text = (ROOT / "data" / fn).read_text()
    assert ')mpc"' not in text
    out.append(f'inline constexpr std::string_view k_{name}_text = R"mpc({text})mpc";')
    out.append("")
out.append(f"inline constexpr std::array<BundledCaseText, {len(CASES)}> k_bundled_cases{{{{")
for name, fn in CASES:
    out.append(f'    {{"{name}", "{fn}", k_{name}_text}},')
out.append("}};")
out += ["", "}  // namespace mmtd::detail", ""]
(ROOT / "include/mmtd/detail/bundled_case_data.hpp").write_text("\n".join(out))
