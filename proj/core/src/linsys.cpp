#include "triplane/linsys.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace triplane::linsys {

LinearSystem LinearSystem::canonical() const {
    std::vector<int> m;
    for (int x : m_)
        if (x != 0) m.push_back(x);
    std::sort(m.begin(), m.end(), std::greater<int>());
    return LinearSystem(d_, std::move(m));
}

std::string LinearSystem::str() const {
    LinearSystem c = canonical();
    std::ostringstream os;
    os << "|" << c.d_;
    if (!c.m_.empty()) {
        os << ";";
        std::size_t i = 0;
        while (i < c.m_.size()) {
            std::size_t j = i;
            while (j < c.m_.size() && c.m_[j] == c.m_[i]) ++j;
            os << " " << c.m_[i];
            if (j - i > 1) os << "^" << (j - i);
            if (j < c.m_.size()) os << ",";
            i = j;
        }
    }
    os << "|";
    return os.str();
}

LinearSystem parse_system(const std::string& text) {
    std::size_t semi = text.find(';');
    auto parse_int = [&](const std::string& tok) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw ParseError("bad integer '" + tok + "'", 0);
        return v;
    };
    std::string head = semi == std::string::npos ? text : text.substr(0, semi);
    // Trim.
    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };
    head = trim(head);
    if (head.empty()) throw ParseError("missing degree", 0);
    int d = parse_int(head);
    std::vector<int> mults;
    if (semi != std::string::npos) {
        std::string rest = text.substr(semi + 1);
        for (char& ch : rest)
            if (ch == ',') ch = ' ';
        std::istringstream is(rest);
        std::string tok;
        while (is >> tok) {
            std::size_t caret = tok.find('^');
            if (caret == std::string::npos) {
                mults.push_back(parse_int(tok));
            } else {
                int m = parse_int(tok.substr(0, caret));
                int k = parse_int(tok.substr(caret + 1));
                if (k < 0) throw ParseError("negative repeat count", caret);
                for (int i = 0; i < k; ++i) mults.push_back(m);
            }
        }
    }
    return LinearSystem(d, std::move(mults));
}

NumericalInvariants invariants(const LinearSystem& s) {
    int d = s.degree();
    NumericalInvariants inv{d * (d + 3) / 2, (d - 1) * (d - 2) / 2, d * d, -3 * d};
    for (int m : s.mults()) {
        inv.virtual_dim -= m * (m + 1) / 2;
        inv.genus -= m * (m - 1) / 2;
        inv.self_int -= m * m;
        inv.k_dot_c += m;
    }
    return inv;
}

LinearSystem adjoint(const LinearSystem& s) {
    std::vector<int> m;
    for (int x : s.mults()) m.push_back(std::max(x - 1, 0));
    return LinearSystem(s.degree() - 3, std::move(m)).canonical();
}

LinearSystem cremona_step(const LinearSystem& s, std::size_t i, std::size_t j, std::size_t k) {
    if (i == j || j == k || i == k) throw DomainError("cremona_step: indices must be distinct");
    std::vector<int> m = s.mults();
    std::size_t need = std::max({i, j, k}) + 1;
    if (m.size() < need) m.resize(need, 0);
    int d = s.degree();
    int mi = m[i], mj = m[j], mk = m[k];
    int nd = 2 * d - mi - mj - mk;
    m[i] = d - mj - mk;
    m[j] = d - mi - mk;
    m[k] = d - mi - mj;
    return LinearSystem(nd, std::move(m));
}

std::string ReductionStep::describe() const {
    std::string what;
    switch (kind) {
        case StepKind::cremona: what = "cremona"; break;
        case StepKind::split_line: what = "split line"; break;
        case StepKind::split_conic: what = "split conic"; break;
        case StepKind::drop_negative: what = "drop negative multiplicity"; break;
    }
    if (!indices.empty()) {
        what += " @ [";
        for (std::size_t n = 0; n < indices.size(); ++n) {
            if (n) what += ",";
            what += std::to_string(indices[n]);
        }
        what += "]";
    }
    return what + " -> " + result.str();
}

NormalizeResult normalize(const LinearSystem& s) {
    NormalizeResult out{s, {}, false};
    LinearSystem cur = s;
    while (cur.degree() > 0) {
        // Indices of the three largest multiplicities.
        std::vector<std::size_t> order(cur.mults().size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return cur.mults()[a] > cur.mults()[b]; });
        std::size_t i = order.size() > 0 ? order[0] : 0;
        std::size_t j = order.size() > 1 ? order[1] : std::max<std::size_t>(1, i + 1);
        std::size_t k = order.size() > 2 ? order[2] : std::max({i, j}) + 1;
        int top = cur.mult(i) + cur.mult(j) + cur.mult(k);
        if (top <= cur.degree()) break;
        cur = cremona_step(cur, i, j, k);
        out.trace.push_back({StepKind::cremona, {i, j, k}, cur});
    }
    out.normal_form = cur;
    out.has_flagged_negative = cur.has_negative_mult();
    return out;
}

namespace {

bool split_lines_once(LinearSystem& cur, std::vector<ReductionStep>& steps) {
    if (cur.degree() < 0) return false;
    const auto& m = cur.mults();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] <= 0) continue;
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (m[j] <= 0) continue;
            if (m[i] + m[j] > cur.degree()) {
                std::vector<int> nm = m;
                nm[i] -= 1;
                nm[j] -= 1;
                cur = LinearSystem(cur.degree() - 1, std::move(nm));
                steps.push_back({StepKind::split_line, {i, j}, cur});
                return true;
            }
        }
    }
    return false;
}

bool split_conic_once(LinearSystem& cur, std::vector<ReductionStep>& steps) {
    if (cur.degree() < 0) return false;
    const auto& m = cur.mults();
    if (m.size() < 5) return false;
    std::vector<std::size_t> order(m.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] > m[b]; });
    int sum5 = 0;
    bool all_positive = true;
    for (int i = 0; i < 5; ++i) {
        sum5 += m[order[static_cast<std::size_t>(i)]];
        if (m[order[static_cast<std::size_t>(i)]] <= 0) all_positive = false;
    }
    if (!all_positive || sum5 <= 2 * cur.degree()) return false;
    std::vector<int> nm = m;
    std::vector<std::size_t> used;
    for (int i = 0; i < 5; ++i) {
        nm[order[static_cast<std::size_t>(i)]] -= 1;
        used.push_back(order[static_cast<std::size_t>(i)]);
    }
    cur = LinearSystem(cur.degree() - 2, std::move(nm));
    steps.push_back({StepKind::split_conic, used, cur});
    return true;
}

} // namespace

SplitResult split_fixed_components(const LinearSystem& s) {
    SplitResult out{{}, s};
    while (split_lines_once(out.residual, out.fixed) || split_conic_once(out.residual, out.fixed)) {
    }
    return out;
}

EmptinessCertificate is_empty(const LinearSystem& s) {
    EmptinessCertificate out{false, {}, ""};
    LinearSystem cur = s.canonical();
    for (int guard = 0; guard < 10000; ++guard) {
        if (cur.degree() < 0) {
            out.empty = true;
            out.reason = "degree negative";
            return out;
        }
        if (split_lines_once(cur, out.chain)) continue;
        if (cur.has_negative_mult()) {
            std::vector<int> nm;
            std::vector<std::size_t> dropped;
            const auto& m = cur.mults();
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] < 0) dropped.push_back(i);
                nm.push_back(std::max(m[i], 0));
            }
            cur = LinearSystem(cur.degree(), std::move(nm));
            out.chain.push_back({StepKind::drop_negative, dropped, cur});
            continue;
        }
        auto norm = normalize(cur);
        if (!norm.trace.empty()) {
            // One step at a time so fixed-component splits interleave.
            out.chain.push_back(norm.trace.front());
            cur = norm.trace.front().result;
            continue;
        }
        if (split_conic_once(cur, out.chain)) continue;
        if (invariants(cur).virtual_dim < 0) {
            out.empty = true;
            out.reason = "virtual dimension negative";
            return out;
        }
        out.reason = "no emptiness proof found";
        return out;
    }
    throw InternalCheckError("is_empty reduction did not terminate");
}

int pencil_branch_bound(int gamma, int d) {
    if (gamma < 0 || d < 1) throw DomainError("pencil_branch_bound: gamma >= 0 and d >= 1 required");
    return (2 * gamma + 4) * d;
}

} // namespace triplane::linsys
