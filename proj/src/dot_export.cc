// Copyright 2026 The ddapprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fmt/format.h>

#include <string>

#include "ddapprox/dd_package.h"

namespace ddapprox {

namespace {

std::string format_weight(Complex w) {
    if (w.im == 0.0) {
        return fmt::format("{:.6g}", w.re);
    }
    if (w.re == 0.0) {
        return fmt::format("{:.6g}i", w.im);
    }
    return fmt::format("{:.6g}{:+.6g}i", w.re, w.im);
}

std::string edge_attrs(const Edge &e, const char *port) {
    std::string attrs = fmt::format("tailport={}", port);
    if (!e.w.is_one()) {
        attrs += fmt::format(", label=\"{}\"", format_weight(e.w));
    }
    return attrs;
}

}  // namespace

std::string to_dot(const StateDD &dd) {
    std::string out = "digraph dd {\n";
    out += "  node [shape=circle, fontname=\"Helvetica\"];\n";
    out += "  root [shape=point, style=invis];\n";
    out += "  t [shape=box, label=\"1\"];\n";

    auto name = [](const Node *n) { return n->is_terminal() ? std::string("t") : fmt::format("n{}", n->id); };

    if (dd.root.is_zero()) {
        out += "  z_root [shape=plaintext, label=\"0\"];\n";
        out += "  root -> z_root;\n}\n";
        return out;
    }
    out += fmt::format("  root -> {} [label=\"{}\"];\n", name(dd.root.node), format_weight(dd.root.w));

    const auto levels = nodes_by_level(dd);
    for (std::size_t l = 0; l < levels.size(); ++l) {
        out += "  { rank=same;";
        for (const Node *n : levels[l]) {
            out += " " + name(n) + ";";
        }
        out += " }\n";
        for (const Node *n : levels[l]) {
            out += fmt::format("  {} [label=\"q{}\"];\n", name(n), n->level);
            static constexpr const char *kPorts[2] = {"sw", "se"};
            for (int b = 0; b < 2; ++b) {
                const Edge &s = n->succ[b];
                if (s.is_zero()) {
                    std::string stub = fmt::format("z{}_{}", n->id, b);
                    out += fmt::format("  {} [shape=plaintext, label=\"0\"];\n", stub);
                    out += fmt::format("  {} -> {} [tailport={}];\n", name(n), stub, kPorts[b]);
                } else {
                    out += fmt::format("  {} -> {} [{}];\n", name(n), name(s.node), edge_attrs(s, kPorts[b]));
                }
            }
        }
    }
    out += "}\n";
    return out;
}

}  // namespace ddapprox
