#include "nilpair/partition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include "nilpair/rational.hpp"

namespace nilpair {

std::string family_name(Family f) {
    switch (f) {
        case Family::SL: return "sl";
        case Family::SO: return "so";
        case Family::SP: return "sp";
    }
    return "?";
}

ClassicalFamily::ClassicalFamily(Family f, int n) : fam(f), size(n) {
    if (n < 1) throw error("bad_family", "size must be positive");
    if (f == Family::SP && n % 2 != 0) throw error("bad_family", "sp size must be even");
}

int ClassicalFamily::rank() const {
    switch (fam) {
        case Family::SL: return size - 1;
        case Family::SO: return size / 2;
        case Family::SP: return size / 2;
    }
    return 0;
}

long ClassicalFamily::dim() const {
    long n = size;
    switch (fam) {
        case Family::SL: return n * n - 1;
        case Family::SO: return n * (n - 1) / 2;
        case Family::SP: return n * (n + 1) / 2;
    }
    return 0;
}

std::string ClassicalFamily::str() const { return family_name(fam) + std::to_string(size); }

ClassicalFamily parse_algebra(const std::string& s) {
    if (s.size() < 3) throw error("bad_algebra", "cannot parse '" + s + "'");
    std::string head = s.substr(0, 2);
    int n = 0;
    try {
        n = std::stoi(s.substr(2));
    } catch (...) {
        throw error("bad_algebra", "cannot parse '" + s + "'");
    }
    if (head == "sl") return {Family::SL, n};
    if (head == "so") return {Family::SO, n};
    if (head == "sp") return {Family::SP, n};
    throw error("bad_algebra", "unknown family in '" + s + "'");
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw error("bad_partition", "parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw error("bad_partition", "parts must be weakly decreasing");
    }
}

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<std::pair<int, int>> Partition::grouped() const {
    std::vector<std::pair<int, int>> g;
    for (int d : parts) {
        if (!g.empty() && g.back().first == d)
            g.back().second++;
        else
            g.emplace_back(d, 1);
    }
    return g;
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Partition(parts);
}

Partition transpose(const Partition& p) {
    if (p.parts.empty()) return p;
    std::vector<int> t(p.parts[0], 0);
    for (int d : p.parts)
        for (int i = 0; i < d; ++i) t[i]++;
    return Partition(t);
}

bool validate_partition(const ClassicalFamily& fam, const Partition& p) {
    if (p.sum() != fam.size) return false;
    if (fam.fam == Family::SL) return true;
    for (auto [d, r] : p.grouped()) {
        if (fam.fam == Family::SP && d % 2 == 1 && r % 2 == 1) return false;
        if (fam.fam == Family::SO && d % 2 == 0 && r % 2 == 1) return false;
    }
    return true;
}

bool is_even_orbit(const Partition& p) {
    for (size_t i = 1; i < p.parts.size(); ++i)
        if ((p.parts[i] - p.parts[0]) % 2 != 0) return false;
    return true;
}

bool is_very_even(const ClassicalFamily& fam, const Partition& p) {
    if (fam.fam != Family::SO) return false;
    for (int d : p.parts)
        if (d % 2 != 0) return false;
    return !p.parts.empty();
}

int SimpleFactor::rank() const {
    switch (fam) {
        case Family::SL: return size - 1;
        case Family::SO: return size / 2;
        case Family::SP: return size / 2;
    }
    return 0;
}

long SimpleFactor::dim() const {
    long n = size;
    switch (fam) {
        case Family::SL: return n * n - 1;
        case Family::SO: return n * (n - 1) / 2;
        case Family::SP: return n * (n + 1) / 2;
    }
    return 0;
}

bool SimpleFactor::is_zero_dim() const { return dim() == 0; }

std::string SimpleFactor::str() const { return family_name(fam) + std::to_string(size); }

AlgebraDescriptor AlgebraDescriptor::make(std::vector<SimpleFactor> fs, int abelian) {
    AlgebraDescriptor d;
    for (auto& f : fs)
        if (!f.is_zero_dim()) d.factors.push_back(f);
    std::sort(d.factors.begin(), d.factors.end());
    d.abelian_rank = abelian;
    return d;
}

int AlgebraDescriptor::rank() const {
    int r = abelian_rank;
    for (const auto& f : factors) r += f.rank();
    return r;
}

long AlgebraDescriptor::dim() const {
    long d = abelian_rank;
    for (const auto& f : factors) d += f.dim();
    return d;
}

bool AlgebraDescriptor::has_so2() const {
    for (const auto& f : factors)
        if (f.fam == Family::SO && f.size == 2) return true;
    return false;
}

int AlgebraDescriptor::center_dim() const {
    int c = abelian_rank;
    for (const auto& f : factors)
        if (f.fam == Family::SO && f.size == 2) c += 1;
    return c;
}

std::string AlgebraDescriptor::str() const {
    if (factors.empty() && abelian_rank == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < factors.size();) {
        size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (!first) os << "+";
        os << factors[i].str();
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    if (abelian_rank > 0) {
        if (!first) os << "+";
        os << "ab" << abelian_rank;
    }
    return os.str();
}

std::string normalized_type_string(const AlgebraDescriptor& d) {
    // Cartan labels with low-rank identifications; so2 folds into the torus.
    std::vector<std::string> labels;
    int torus = d.abelian_rank;
    for (const auto& f : d.factors) {
        int n = f.size;
        switch (f.fam) {
            case Family::SL:
                if (n >= 2) labels.push_back("A" + std::to_string(n - 1));
                break;
            case Family::SP: {
                int k = n / 2;
                if (k == 1) labels.push_back("A1");
                else if (k == 2) labels.push_back("B2");
                else if (k >= 3) labels.push_back("C" + std::to_string(k));
                break;
            }
            case Family::SO:
                if (n == 2) torus += 1;
                else if (n == 3) labels.push_back("A1");
                else if (n == 4) { labels.push_back("A1"); labels.push_back("A1"); }
                else if (n == 5) labels.push_back("B2");
                else if (n == 6) labels.push_back("A3");
                else if (n >= 7 && n % 2 == 1) labels.push_back("B" + std::to_string(n / 2));
                else if (n >= 8) labels.push_back("D" + std::to_string(n / 2));
                break;
        }
    }
    std::sort(labels.begin(), labels.end());
    std::ostringstream os;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) os << "+";
        os << labels[i];
    }
    if (torus > 0) {
        if (!labels.empty()) os << "+";
        os << "ab" << torus;
    }
    if (labels.empty() && torus == 0) return "0";
    return os.str();
}

bool iso_equal(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
    return normalized_type_string(a) == normalized_type_string(b);
}

AlgebraDescriptor levi_of_even_orbit(const ClassicalFamily& fam, const Partition& p) {
    if (!validate_partition(fam, p)) throw error("invalid_partition", p.str());
    if (!is_even_orbit(p)) throw error("not_even", "levi formula only valid for even orbits");
    auto g = p.grouped();
    const int m = static_cast<int>(g.size());
    std::vector<SimpleFactor> fs;
    int abelian = 0;
    const int d1 = g[0].first;
    if (fam.fam == Family::SL) {
        int big_r = 0;
        for (int i = 0; i < m; ++i) {
            big_r += g[i].second;
            int next = (i + 1 < m) ? g[i + 1].first : 0;
            for (int c = 0; c < g[i].first - next; ++c)
                fs.push_back({Family::SL, big_r});
        }
        abelian = d1 - 1;
    } else {
        const bool odd_parts = (d1 % 2 == 1);
        const int sentinel = odd_parts ? 1 : 0;
        int big_r = 0;
        for (int i = 0; i < m; ++i) {
            big_r += g[i].second;
            int next = (i + 1 < m) ? g[i + 1].first : sentinel;
            for (int c = 0; c < (g[i].first - next) / 2; ++c)
                fs.push_back({Family::SL, big_r});
        }
        if (odd_parts)
            fs.push_back({fam.fam == Family::SP ? Family::SP : Family::SO, big_r});
        abelian = odd_parts ? (d1 - 1) / 2 : d1 / 2;
    }
    return AlgebraDescriptor::make(std::move(fs), abelian);
}

AlgebraDescriptor reductive_centralizer(const ClassicalFamily& fam, const Partition& p) {
    if (!validate_partition(fam, p)) throw error("invalid_partition", p.str());
    auto g = p.grouped();
    std::vector<SimpleFactor> fs;
    int abelian = 0;
    if (fam.fam == Family::SL) {
        for (auto [d, r] : g) fs.push_back({Family::SL, r});
        abelian = static_cast<int>(g.size()) - 1;
    } else {
        for (auto [d, r] : g) {
            bool sympl = (fam.fam == Family::SP) ? (d % 2 == 1) : (d % 2 == 0);
            fs.push_back({sympl ? Family::SP : Family::SO, r});
        }
    }
    return AlgebraDescriptor::make(std::move(fs), abelian);
}

AlgebraDescriptor double_centralizer(const ClassicalFamily& fam, const Partition& p) {
    if (!validate_partition(fam, p)) throw error("invalid_partition", p.str());
    auto g = p.grouped();
    std::vector<SimpleFactor> fs;
    int abelian = 0;
    if (fam.fam == Family::SL) {
        for (auto [d, r] : g) fs.push_back({Family::SL, d});
        abelian = static_cast<int>(g.size()) - 1;
        return AlgebraDescriptor::make(std::move(fs), abelian);
    }
    // A part contributes an so (resp. sp) factor in k exactly when the
    // multiplicity space carries a symmetric (resp. skew) form.
    int merged = 0;  // multiplicity-one parts with trivial k-action pool together
    for (auto [d, r] : g) {
        bool k_orthogonal = (fam.fam == Family::SP) ? (d % 2 == 0) : (d % 2 == 1);
        if (k_orthogonal && r == 2)
            throw error("unsupported_so2",
                        "double centralizer formula assumes multiplicity != 2 for " +
                            std::to_string(d) + "^2");
        if (k_orthogonal && r == 1) {
            merged += d;
            continue;
        }
        // the k^d side of the tensor factorization carries a symmetric form
        // for odd d and a skew one for even d, in either ambient family
        fs.push_back({d % 2 == 1 ? Family::SO : Family::SP, d});
    }
    if (merged > 0)
        fs.push_back({fam.fam == Family::SO ? Family::SO : Family::SP, merged});
    return AlgebraDescriptor::make(std::move(fs), abelian);
}

// dim of the centre of z(h~), from the eigenvalue multiset of h~ on the
// defining representation; valid for arbitrary partitions.
static int center_levi_dim(const ClassicalFamily& fam, const Partition& p) {
    std::map<int, int> mult;  // 2*eigenvalue -> multiplicity
    for (int d : p.parts)
        for (int v = d - 1; v >= 1 - d; v -= 2) mult[v]++;
    if (fam.fam == Family::SL) return static_cast<int>(mult.size()) - 1;
    int c = 0;
    for (auto [v, n] : mult)
        if (v > 0) c++;
    auto z = mult.find(0);
    if (fam.fam == Family::SO && z != mult.end() && z->second == 2) c++;  // so2 block
    return c;
}

// rank of z(k), including the gl_d commutant of so2 factors; validated against
// the matrix engine in the test suite.
static int rank_double_centralizer_ext(const ClassicalFamily& fam, const Partition& p) {
    auto g = p.grouped();
    if (fam.fam == Family::SL) {
        int r = static_cast<int>(g.size()) - 1;
        for (auto [d, m] : g) r += d - 1;
        return r;
    }
    int rank = 0, merged = 0;
    for (auto [d, r] : g) {
        bool k_orthogonal = (fam.fam == Family::SP) ? (d % 2 == 0) : (d % 2 == 1);
        if (!k_orthogonal) {
            // k-factor sp_r, commutant factor so_d (SP ambient) or sp_d (SO)
            rank += (fam.fam == Family::SP) ? (d - 1) / 2 : d / 2;
        } else if (r == 1) {
            merged += d;
        } else if (r == 2) {
            rank += d;  // so2 torus commutes with a full gl_d
        } else {
            rank += (fam.fam == Family::SP) ? d / 2 : (d - 1) / 2;
        }
    }
    rank += merged / 2;
    return rank;
}

ExcellenceCertificate is_excellent(const ClassicalFamily& fam, const Partition& p) {
    if (!validate_partition(fam, p)) throw error("invalid_partition", p.str());
    ExcellenceCertificate cert;
    cert.is_even = is_even_orbit(p);
    cert.dim_center_levi = center_levi_dim(fam, p);
    cert.rank_double_centralizer = rank_double_centralizer_ext(fam, p);
    cert.verdict = cert.is_even && cert.dim_center_levi == cert.rank_double_centralizer;
    auto g = p.grouped();
    cert.anomaly_flag = cert.verdict && fam.fam == Family::SO && g.size() == 2 &&
                        g[0].second == 1 && g[1].second == 1 && g[1].first == 1;
    return cert;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int d = std::min(rest, maxpart); d >= 1; --d) {
            cur.push_back(d);
            self(self, rest - d, d);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Partition> valid_partitions(const ClassicalFamily& fam) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(fam.size))
        if (validate_partition(fam, p)) out.push_back(p);
    return out;
}

std::vector<ExcellentOrbit> enumerate_excellent(Family family, int max_size) {
    if (max_size < 2) throw error("bad_range", "max_size must be >= 2");
    std::vector<ExcellentOrbit> out;
    int lo = (family == Family::SO) ? 3 : 2;
    int step = (family == Family::SP) ? 2 : 1;
    if (family == Family::SP && lo % 2) lo = 2;
    for (int n = lo; n <= max_size; n += step) {
        ClassicalFamily fam(family, n);
        for (auto& p : valid_partitions(fam)) {
            auto cert = is_excellent(fam, p);
            if (cert.verdict) out.push_back({fam, p, cert});
        }
    }
    return out;
}

std::vector<int> weighted_diagram_from_partition(const ClassicalFamily& fam,
                                                 const Partition& p) {
    if (!validate_partition(fam, p)) throw error("invalid_partition", p.str());
    std::vector<int> vals;  // eigenvalues of h~ on the defining module, doubled not needed
    for (int d : p.parts)
        for (int v = d - 1; v >= 1 - d; v -= 2) vals.push_back(v);
    std::sort(vals.rbegin(), vals.rend());
    std::vector<int> labels;
    const int n = fam.size;
    if (fam.fam == Family::SL) {
        for (int i = 0; i + 1 < n; ++i) labels.push_back(vals[i] - vals[i + 1]);
    } else if (fam.fam == Family::SP) {
        int k = n / 2;
        for (int i = 0; i + 1 < k; ++i) labels.push_back(vals[i] - vals[i + 1]);
        labels.push_back(2 * vals[k - 1]);
    } else if (n % 2 == 1) {  // B_k
        int k = n / 2;
        for (int i = 0; i + 1 < k; ++i) labels.push_back(vals[i] - vals[i + 1]);
        labels.push_back(vals[k - 1]);
    } else {  // D_k, nonnegative representative of the two very even orbits
        int k = n / 2;
        for (int i = 0; i + 1 < k; ++i) labels.push_back(vals[i] - vals[i + 1]);
        labels.push_back(vals[k - 2] + vals[k - 1]);
    }
    for (int l : labels)
        if (l < 0 || l > 2) throw error("bad_diagram", "label outside {0,1,2} (bug)");
    return labels;
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.sum() != q.sum()) throw error("size_mismatch", "partitions of different integers");
    int sp = 0, sq = 0;
    size_t n = std::max(p.parts.size(), q.parts.size());
    for (size_t i = 0; i < n; ++i) {
        sp += i < p.parts.size() ? p.parts[i] : 0;
        sq += i < q.parts.size() ? q.parts[i] : 0;
        if (sp > sq) return false;
    }
    return true;
}

Partition spaltenstein_dual_A(const Partition& p) { return transpose(p); }

}  // namespace nilpair
