#include "qchar/gram.hpp"

#include <json.hpp>

namespace qchar {

GramSession::GramSession(RootSystem rs, Weight lambda)
    : rs_(std::move(rs)), lambda_(std::move(lambda)) {
    if (lambda_.rank() != rs_.rank())
        throw std::invalid_argument("highest weight rank does not match the root system");
}

LaurentPoly GramSession::raw(const Path& delta, const Path& gamma) {
    if (delta.height(rs_.rank()) != gamma.height(rs_.rank()))
        throw HeightMismatch("paths " + delta.to_string() + " and " + gamma.to_string() +
                             " have different heights");
    return raw_memo(delta, gamma);
}

// Peel the first step beta of delta: every beta-step of gamma can be the
// partner, weighted by the quantum integer of the pairing of (lambda minus
// the suffix of gamma after that step) with beta. Equivalent to composing
// lowering operators for delta in order against the basis path gamma and
// reading off the coefficient of the empty path; the operator form is the
// oracle the unit tests compare against.
LaurentPoly GramSession::raw_memo(const Path& delta, const Path& gamma) {
    if (delta.empty()) return LaurentPoly(1);

    // the pairing is symmetric, so cache on the unordered pair
    std::pair<Path, Path> key = delta <= gamma ? std::make_pair(delta, gamma)
                                               : std::make_pair(gamma, delta);
    {
        std::scoped_lock lock(mu_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    const int beta = delta[0];
    const long d_beta = rs_.sym(beta);
    const Path rest = delta.without(0);
    LaurentPoly acc;
    long tail = 0;  // <gamma_{i+1} + ... + gamma_last, beta^vee>
    for (size_t i = gamma.length(); i-- > 0;) {
        if (gamma[i] == beta)
            acc += qint(rs_.pairing(lambda_, beta) - tail, d_beta) * raw_memo(rest, gamma.without(i));
        tail += rs_.cartan(gamma[i], beta);
    }

    std::scoped_lock lock(mu_);
    memo_.emplace(std::move(key), acc);
    return acc;
}

LaurentPoly GramSession::entry(const Path& delta, const Path& gamma) {
    // The raw pairing is always divisible by the product of run factorials;
    // a failure here is a library bug, so NonExactDivision is left fatal.
    return exact_div(raw(delta, gamma), path_factorial(rs_, delta) * path_factorial(rs_, gamma));
}

GramMatrix GramSession::matrix(const RootVector& nu) {
    if (nu.rank() != rs_.rank()) throw std::invalid_argument("height rank mismatch");
    GramMatrix m;
    m.system = rs_.label();
    m.lambda = lambda_;
    m.height = nu;
    m.order = enumerate_paths(nu);
    const size_t n = m.order.size();
    m.entries.assign(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            m.entries[i][j] = entry(m.order[i], m.order[j]);
            if (j != i) m.entries[j][i] = m.entries[i][j];
        }
    return m;
}

LaurentPoly gram_raw(const RootSystem& rs, const Weight& lambda, const Path& delta,
                     const Path& gamma) {
    GramSession s(rs, lambda);
    return s.raw(delta, gamma);
}

LaurentPoly gram_entry(const RootSystem& rs, const Weight& lambda, const Path& delta,
                       const Path& gamma) {
    GramSession s(rs, lambda);
    return s.entry(delta, gamma);
}

GramMatrix gram_matrix(const RootSystem& rs, const Weight& lambda, const RootVector& nu) {
    GramSession s(rs, lambda);
    return s.matrix(nu);
}

std::string gram_matrix_json(const GramMatrix& m) {
    nlohmann::json doc;
    doc["system"] = m.system;
    doc["lambda"] = m.lambda.coords;
    doc["height"] = m.height.coeffs;
    auto& paths = doc["paths"] = nlohmann::json::array();
    for (const auto& p : m.order) paths.push_back(p.to_string());
    auto& entries = doc["entries"] = nlohmann::json::array();
    for (const auto& row : m.entries) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& e : row) jrow.push_back(e.to_string());
        entries.push_back(std::move(jrow));
    }
    return doc.dump();
}

}  // namespace qchar
