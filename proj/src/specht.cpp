#include "klspecht/specht.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "klspecht/hecke.hpp"
#include "klspecht/rsk.hpp"

namespace klspecht {

BasisOrder::BasisOrder(Partition shape, std::vector<StandardTableau> sequence)
    : shape_(std::move(shape)), sequence_(std::move(sequence)) {
    for (std::size_t k = 0; k < sequence_.size(); ++k) {
        if (sequence_[k].shape() != shape_) throw std::invalid_argument("BasisOrder: tableau of wrong shape");
        if (!position_.emplace(sequence_[k], static_cast<int>(k)).second) {
            throw std::invalid_argument("BasisOrder: repeated tableau");
        }
    }
    if (static_cast<long long>(sequence_.size()) != count_syt(shape_)) {
        throw std::invalid_argument("BasisOrder: does not cover SYT(" + shape_.str() + ")");
    }
}

BasisOrder BasisOrder::total_index(const Partition& shape) {
    return BasisOrder(shape, enumerate_syt(shape));
}

int BasisOrder::position(const StandardTableau& t) const {
    auto it = position_.find(t);
    if (it == position_.end()) throw std::invalid_argument("BasisOrder: unknown tableau " + t.str());
    return it->second;
}

bool BasisOrder::is_index_monotone() const {
    for (std::size_t k = 1; k < sequence_.size(); ++k) {
        if (index(sequence_[k]) < index(sequence_[k - 1])) return false;
    }
    return true;
}

std::string BasisOrder::str() const {
    std::string out;
    for (std::size_t k = 0; k < sequence_.size(); ++k) {
        if (k > 0) out += " ";
        out += sequence_[k].str();
    }
    return out;
}

SpechtModule::SpechtModule(const Partition& shape) : shape_(shape), tableaux_(enumerate_syt(shape)) {
    const int n = shape.size();
    const int d = dim();
    descents_.assign(d, std::vector<bool>(std::max(n, 1), false));
    std::vector<Permutation> words;
    for (int t = 0; t < d; ++t) {
        canonical_.emplace(tableaux_[t], t);
        for (int j : descent_set(tableaux_[t])) descents_[t][j] = true;
        words.push_back(column_word(tableaux_[t]));
    }
    mu_.assign(d, std::vector<long long>(d, 0));
    if (n >= 2) {
        auto& table = KLTable::for_size(n);
        for (int t = 0; t < d; ++t) {
            for (int r = t + 1; r < d; ++r) mu_[t][r] = mu_[r][t] = table.mu(words[t], words[r]);
        }
    }
}

const SpechtModule& SpechtModule::for_shape(const Partition& shape) {
    static std::mutex registry_mutex;
    static std::map<Partition, std::unique_ptr<SpechtModule>> registry;
    {
        std::lock_guard lock(registry_mutex);
        if (auto it = registry.find(shape); it != registry.end()) return *it->second;
    }
    auto module = std::make_unique<SpechtModule>(shape);
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[shape];
    if (!slot) slot = std::move(module);
    return *slot;
}

ExactMatrix SpechtModule::generator(int j, const BasisOrder& order) const {
    const int n = shape_.size();
    if (j < 1 || j > n - 1) throw std::out_of_range("generator index out of range");
    if (order.shape() != shape_) throw std::invalid_argument("generator: order has the wrong shape");
    const int d = dim();
    // canonical index -> position in order
    std::vector<int> pos(d);
    for (int t = 0; t < d; ++t) pos[t] = order.position(tableaux_[t]);
    ExactMatrix m(d, d);
    for (int t = 0; t < d; ++t) {
        if (descents_[t][j]) {
            m(pos[t], pos[t]) = -1;
            continue;
        }
        m(pos[t], pos[t]) = 1;
        for (int r = 0; r < d; ++r) {
            if (descents_[r][j] && mu_[t][r] != 0) m(pos[r], pos[t]) += static_cast<long>(mu_[t][r]);
        }
    }
    return m;
}

ExactMatrix SpechtModule::matrix(const Permutation& w, const BasisOrder& order) const {
    if (w.size() != shape_.size()) throw std::invalid_argument("matrix: permutation size mismatch");
    ExactMatrix m = ExactMatrix::identity(dim());
    std::map<int, ExactMatrix> gens;
    for (int j : reduced_word(w)) {
        auto it = gens.find(j);
        if (it == gens.end()) it = gens.emplace(j, generator(j, order)).first;
        m = m * it->second;
    }
    return m;
}

ExactMatrix generator_matrix(const Partition& shape, int j, const BasisOrder& order) {
    return SpechtModule::for_shape(shape).generator(j, order);
}

ExactMatrix matrix_of(const Partition& shape, const Permutation& w, const BasisOrder& order) {
    return SpechtModule::for_shape(shape).matrix(w, order);
}

CheckReport check_filtration_invariance(const Partition& shape) {
    CheckReport report;
    report.check = "filtration";
    report.shape = shape.str();
    report.ordering = "total-index";
    const int n = shape.size();
    if (n < 2) throw std::invalid_argument("check_filtration_invariance needs n >= 2");
    const auto& module = SpechtModule::for_shape(shape);
    const auto order = BasisOrder::total_index(shape);
    std::vector<int> idx;
    for (const auto& t : order.sequence()) idx.push_back(index(t));
    for (int j = 1; j <= n - 2; ++j) {
        ExactMatrix g = module.generator(j, order);
        for (int c = 0; c < order.dim(); ++c) {
            for (int r = 0; r < order.dim(); ++r) {
                if (idx[r] > idx[c] && sgn(g(r, c)) != 0) {
                    report.fail("s_" + std::to_string(j) + " sends C_" + order[c].str() + " (index " +
                                std::to_string(idx[c]) + ") onto C_" + order[r].str() + " (index " +
                                std::to_string(idx[r]) + ")");
                }
            }
        }
    }
    return report;
}

std::vector<ExactMatrix> quotient_matrices(const Partition& shape, int i) {
    const int n = shape.size();
    const int r = static_cast<int>(removable_boxes(shape).size());
    if (i < 1 || i > r) throw std::out_of_range("quotient_matrices: i out of range");
    const auto order = BasisOrder::total_index(shape);
    std::vector<int> members;
    for (int k = 0; k < order.dim(); ++k) {
        if (index(order[k]) == i) members.push_back(k);
    }
    const auto& module = SpechtModule::for_shape(shape);
    std::vector<ExactMatrix> out;
    for (int j = 1; j <= n - 2; ++j) {
        ExactMatrix g = module.generator(j, order);
        const int d = static_cast<int>(members.size());
        ExactMatrix q(d, d);
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) q(a, b) = g(members[a], members[b]);
        }
        out.push_back(std::move(q));
    }
    return out;
}

CheckReport check_branching(const Partition& shape) {
    CheckReport report;
    report.check = "branching";
    report.shape = shape.str();
    report.ordering = "total-index";
    const int n = shape.size();
    if (n < 2) throw std::invalid_argument("check_branching needs n >= 2");
    const auto order = BasisOrder::total_index(shape);
    const int r = static_cast<int>(removable_boxes(shape).size());
    std::set<Partition> seen;
    std::string restriction;
    for (int i = 1; i <= r; ++i) {
        Partition smaller = remove_box(shape, i);
        if (!restriction.empty()) restriction += " + ";
        restriction += "S^(" + smaller.str() + ")";
        if (!seen.insert(smaller).second) report.fail("restriction has a repeated summand " + smaller.str());

        // d_i: class members (total index order) -> SYT(mu_i)
        std::vector<StandardTableau> images;
        for (const auto& t : order.sequence()) {
            if (index(t) == i) images.push_back(delete_largest(t).first);
        }
        if (static_cast<long long>(images.size()) != count_syt(smaller)) {
            report.fail("index class " + std::to_string(i) + " has " + std::to_string(images.size()) +
                        " members but SYT(" + smaller.str() + ") has " + std::to_string(count_syt(smaller)));
            continue;
        }
        BasisOrder image_order(smaller, images);  // throws if d_i is not a bijection
        auto quotients = quotient_matrices(shape, i);
        for (int j = 1; j <= n - 2; ++j) {
            if (quotients[j - 1] != generator_matrix(smaller, j, image_order)) {
                report.fail("quotient " + std::to_string(i) + " differs from S^(" + smaller.str() +
                            ") at s_" + std::to_string(j));
            }
        }
    }
    report.witness = "res = " + restriction;
    return report;
}

}  // namespace klspecht
