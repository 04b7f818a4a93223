#include "qchar/characters.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace qchar {

long matrix_rank(const Field& k, const GramMatrix& m) {
    const size_t n = m.order.size();
    std::vector<std::vector<FieldElement>> a(n);
    for (size_t i = 0; i < n; ++i) {
        a[i].reserve(n);
        for (size_t j = 0; j < n; ++j) a[i].push_back(k.specialize(m.entries[i][j]));
    }
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && k.is_zero(a[piv][col])) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        FieldElement inv = k.inv(a[rank][col]);
        for (size_t i = rank + 1; i < n; ++i) {
            if (k.is_zero(a[i][col])) continue;
            FieldElement f = k.mul(a[i][col], inv);
            for (size_t j = col; j < n; ++j) a[i][j] = k.sub(a[i][j], k.mul(f, a[rank][j]));
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

long weight_multiplicity(const Field& k, GramSession& session, const Weight& mu) {
    auto nu = session.system().root_decompose(session.lambda(), mu);
    if (!nu) return 0;
    return matrix_rank(k, session.matrix(*nu));
}

long weight_multiplicity(const Field& k, const RootSystem& rs, const Weight& lambda,
                         const Weight& mu) {
    GramSession session(rs, lambda);
    return weight_multiplicity(k, session, mu);
}

namespace {

std::vector<RootVector> box_points(const RootVector& bound) {
    if (!bound.is_nonnegative()) throw std::invalid_argument("height bound must be nonnegative");
    std::vector<RootVector> out;
    RootVector c = RootVector::zero(bound.rank());
    for (;;) {
        out.push_back(c);
        size_t i = 0;
        while (i < c.rank() && c.coeffs[i] == bound[i]) c.coeffs[i++] = 0;
        if (i == c.rank()) break;
        ++c.coeffs[i];
    }
    return out;
}

}  // namespace

MultiplicityTable character_table(const Field& k, const RootSystem& rs, const Weight& lambda,
                                  const RootVector& bound, int jobs) {
    if (bound.rank() != rs.rank()) throw std::invalid_argument("bound rank mismatch");
    MultiplicityTable t;
    t.system = rs.label();
    t.field = k.spec();
    t.lambda = lambda;
    t.height_bound = bound;

    GramSession session(rs, lambda);
    std::vector<RootVector> nus = box_points(bound);
    std::vector<long> dims(nus.size());

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < nus.size(); ++i)
            dims[i] = matrix_rank(k, session.matrix(nus[i]));
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= nus.size()) return;
                dims[i] = matrix_rank(k, session.matrix(nus[i]));
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (size_t i = 0; i < nus.size(); ++i)
        t.entries.emplace_back(lambda - rs.weight_of(nus[i]), dims[i]);
    std::sort(t.entries.begin(), t.entries.end());
    return t;
}

std::string multiplicity_table_json(const MultiplicityTable& t) {
    nlohmann::json doc;
    doc["system"] = t.system;
    doc["field"] = t.field.to_string();
    doc["lambda"] = t.lambda.coords;
    doc["bound"] = t.height_bound.coeffs;
    auto& mults = doc["mults"] = nlohmann::json::array();
    for (const auto& [mu, dim] : t.entries) {
        nlohmann::json row;
        row["mu"] = mu.coords;
        row["dim"] = dim;
        mults.push_back(std::move(row));
    }
    return doc.dump();
}

std::string multiplicity_table_csv(const MultiplicityTable& t) {
    std::ostringstream out;
    const size_t r = t.lambda.rank();
    for (size_t i = 0; i < r; ++i) out << "mu_" << i << ',';
    out << "dim\n";
    for (const auto& [mu, dim] : t.entries) {
        for (size_t i = 0; i < r; ++i) out << mu[i] << ',';
        out << dim << '\n';
    }
    return out.str();
}

}  // namespace qchar
