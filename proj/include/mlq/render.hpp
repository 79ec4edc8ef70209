#pragma once
// Plain-text rendering: cylinders with their chain labels, tableau diagrams,
// and small aligned tables. Everything here is a pure function of its input,
// so text output stays bit-stable run to run.

#include <string>
#include <vector>

#include "composition.hpp"
#include "mlq.hpp"
#include "queue_tableaux.hpp"
#include "xpoly.hpp"

namespace mlq {

// Rows are printed top to bottom; each occupied cell shows its chain label,
// empty cells show a dot, and a 1-based column ruler closes the block.
inline std::string render_queue(const MultilineQueue& q) {
    const int L = q.system.L;
    const int n = q.system.n;
    std::string out;
    for (int r = L; r >= 1; --r) {
        out += std::to_string(r) + " |";
        for (int c = 0; c < n; ++c) {
            auto it = q.labels[r].find(c);
            out += " ";
            out += it == q.labels[r].end() ? "." : std::to_string(it->second);
        }
        out += "\n";
    }
    out += "  +";
    for (int c = 0; c < n; ++c) out += "--";
    out += "\n   ";
    for (int c = 0; c < n; ++c) out += " " + std::to_string((c + 1) % 10);
    out += "\n";
    return out;
}

// One line per pairing event, in audit order.
inline std::string render_events(const MultilineQueue& q) {
    std::string out;
    for (const auto& e : q.events) {
        out += "row " + std::to_string(e.row) + " label " + std::to_string(e.label) + ": " +
               std::to_string(e.from_col + 1) + " -> " + std::to_string(e.to_col + 1);
        if (e.trivial) out += " (trivial)";
        if (e.wrapped) out += " (wrapped)";
        out += "  skipped=" + std::to_string(e.skipped) +
               " free=" + std::to_string(e.free_count) + "  weight " +
               event_weight(e).str() + "\n";
    }
    return out;
}

// Column diagram over the basement row; entries are shown as 1-based cylinder
// columns, with restricted boxes marked by a trailing asterisk.
inline std::string render_tableau(const QueueTableau& T) {
    const int n = T.n;
    int height = 0;
    for (int v : T.lambda) height = std::max(height, v);
    auto cell = [&](int k, int j) -> std::string {
        if (j > T.lambda[k]) return "   ";
        std::string s = std::to_string(T.entry(k, j) + 1);
        s += (j >= 1 && T.restricted(k, j)) ? "*" : " ";
        while (s.size() < 3) s = " " + s;
        return s;
    };
    std::string out;
    for (int j = height; j >= 1; --j) {
        out += "|";
        for (int k = 0; k < n; ++k) out += cell(k, j);
        out += "|\n";
    }
    out += "+";
    for (int k = 0; k < n; ++k) out += "---";
    out += "+\n|";
    for (int k = 0; k < n; ++k) out += cell(k, 0);
    out += "|\n";
    return out;
}

// Two-column table with a fixed gutter, used for the verification reports.
inline std::string render_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t width = 0;
    for (const auto& [l, r] : rows) width = std::max(width, l.size());
    std::string out;
    for (const auto& [l, r] : rows) {
        out += "  " + l + std::string(width - l.size() + 2, ' ') + r + "\n";
    }
    return out;
}

}  // namespace mlq
