#include "ipc/path_cover.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ipc/errors.hpp"

namespace ipc {

PathCover::PathCover(std::vector<Path> paths, std::optional<Vertex> terminal, int n)
    : paths_(std::move(paths)), terminal_(terminal), n_(n) {
    for (auto& p : paths_) {
        if (p.vertices.empty()) continue;
        const bool holds_terminal =
            terminal_ && (p.front() == *terminal_ || p.back() == *terminal_);
        if (holds_terminal) {
            p.kind = PathKind::Terminal;
            if (p.front() != *terminal_) std::reverse(p.vertices.begin(), p.vertices.end());
        } else {
            p.kind = PathKind::Free;
            if (p.back() < p.front()) std::reverse(p.vertices.begin(), p.vertices.end());
        }
    }
    std::stable_sort(paths_.begin(), paths_.end(), [](const Path& a, const Path& b) {
        if (a.vertices.empty() || b.vertices.empty()) return a.vertices.size() < b.vertices.size();
        return a.left_end() < b.left_end();
    });
}

void PathCover::write(std::ostream& out) const {
    out << "lambda=" << lambda() << " terminal=";
    if (terminal_) {
        out << *terminal_;
    } else {
        out << "none";
    }
    out << " n=" << n_ << '\n';
    for (std::size_t k = 0; k < paths_.size(); ++k) {
        out << 'P' << (k + 1) << ' ' << (paths_[k].kind == PathKind::Terminal ? 'T' : 'F') << ':';
        for (Vertex v : paths_[k].vertices) out << ' ' << v;
        out << '\n';
    }
}

std::string PathCover::str() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

PathCover PathCover::parse(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int lambda = 0;
    int n = 0;
    std::optional<Vertex> terminal;
    std::vector<Path> paths;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head)) continue;
        if (!have_header) {
            std::string t_field, n_field;
            if (head.rfind("lambda=", 0) != 0 || !(fields >> t_field >> n_field) ||
                t_field.rfind("terminal=", 0) != 0 || n_field.rfind("n=", 0) != 0) {
                throw ParseError(line_no, "expected 'lambda=<k> terminal=<t|none> n=<n>'");
            }
            try {
                lambda = std::stoi(head.substr(7));
                n = std::stoi(n_field.substr(2));
                const std::string t = t_field.substr(9);
                if (t != "none") terminal = std::stoi(t);
            } catch (const std::exception&) {
                throw ParseError(line_no, "malformed header value");
            }
            have_header = true;
            continue;
        }
        std::string kind;
        if (head.size() < 2 || head[0] != 'P' || !(fields >> kind) ||
            (kind != "T:" && kind != "F:")) {
            throw ParseError(line_no, "expected 'P<k> <T|F>: vertices...'");
        }
        Path p;
        p.kind = kind == "T:" ? PathKind::Terminal : PathKind::Free;
        Vertex v = 0;
        while (fields >> v) p.vertices.push_back(v);
        if (!fields.eof()) throw ParseError(line_no, "non-integer vertex");
        if (p.vertices.empty()) throw ParseError(line_no, "empty path");
        paths.push_back(std::move(p));
    }
    if (!have_header) throw ParseError(0, "missing header");
    if (static_cast<int>(paths.size()) != lambda) {
        throw ParseError(0, "header says lambda=" + std::to_string(lambda) + " but " +
                                std::to_string(paths.size()) + " paths follow");
    }
    // Keep the file's orientation and order so verification sees exactly what was written.
    PathCover cover;
    cover.paths_ = std::move(paths);
    cover.terminal_ = terminal;
    cover.n_ = n;
    return cover;
}

}  // namespace ipc
