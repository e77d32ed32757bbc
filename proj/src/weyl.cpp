#include "preproj/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace preproj {

namespace {

IntMatrix identity_matrix(int n)
{
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

std::vector<long long> mat_vec(const IntMatrix& a, const std::vector<long long>& v)
{
    std::vector<long long> out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += a[i][j] * v[j];
    return out;
}

}  // namespace

WeylGroup::WeylGroup(const Quiver& q)
{
    if (!dynkin_components(q))
        throw UnsupportedInput("Weyl group requested for a non-Dynkin graph");
    n_ = q.vertex_count;
    cartan_ = identity_matrix(n_);
    for (auto& row : cartan_)
        for (auto& x : row)
            x *= 2;
    for (const auto& a : q.arrows) {
        if (q.star && a.id > (*q.star)[a.id])
            continue;
        cartan_[a.source - 1][a.target - 1] = -1;
        cartan_[a.target - 1][a.source - 1] = -1;
    }
    for (int i = 0; i < n_; ++i) {
        IntMatrix s = identity_matrix(n_);
        for (int j = 0; j < n_; ++j)
            s[i][j] -= cartan_[i][j];
        gens_.push_back(std::move(s));
    }

    WeylElement e{identity_matrix(n_), {}};
    index_.emplace(e.matrix, 0);
    elements_.push_back(e);
    for (std::size_t head = 0; head < elements_.size(); ++head)
        for (int i = 1; i <= n_; ++i) {
            IntMatrix m = apply_generator(elements_[head].matrix, i);
            if (index_.count(m))
                continue;
            Word w = elements_[head].word;
            w.push_back(i);
            index_.emplace(m, elements_.size());
            elements_.push_back({std::move(m), std::move(w)});
        }
    // BFS order is already (length, shortlex); re-sort defensively and reindex.
    std::stable_sort(elements_.begin(), elements_.end(), [](const WeylElement& x, const WeylElement& y) {
        if (x.length() != y.length())
            return x.length() < y.length();
        return x.word < y.word;
    });
    for (std::size_t k = 0; k < elements_.size(); ++k)
        index_[elements_[k].matrix] = k;

    std::set<std::vector<long long>> seen;
    std::deque<std::vector<long long>> queue;
    for (int i = 0; i < n_; ++i) {
        std::vector<long long> r(n_, 0);
        r[i] = 1;
        queue.push_back(r);
        seen.insert(r);
    }
    while (!queue.empty()) {
        auto r = queue.front();
        queue.pop_front();
        for (const auto& s : gens_) {
            auto img = mat_vec(s, r);
            if (seen.insert(img).second)
                queue.push_back(img);
        }
    }
    for (const auto& r : seen)
        if (std::all_of(r.begin(), r.end(), [](long long x) { return x >= 0; }))
            roots_.push_back(r);
}

IntMatrix WeylGroup::apply_generator(const IntMatrix& m, int i) const { return mat_mul(m, gens_[i - 1]); }

bool WeylGroup::is_type_a3() const
{
    if (n_ != 3)
        return false;
    IntMatrix a3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    return cartan_ == a3;
}

WeylElement WeylGroup::identity() const { return elements_.front(); }

WeylElement WeylGroup::from_word(const Word& w) const
{
    IntMatrix m = identity_matrix(n_);
    for (int i : w) {
        if (i < 1 || i > n_)
            throw std::out_of_range("generator index out of range");
        m = apply_generator(m, i);
    }
    return canonical(m);
}

WeylElement WeylGroup::multiply(const WeylElement& x, const WeylElement& y) const
{
    return canonical(mat_mul(x.matrix, y.matrix));
}

WeylElement WeylGroup::inverse(const WeylElement& x) const
{
    Word w(x.word.rbegin(), x.word.rend());
    return from_word(w);
}

bool WeylGroup::is_reduced(const Word& w) const { return from_word(w).length() == static_cast<int>(w.size()); }

const WeylElement& WeylGroup::canonical(const IntMatrix& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        throw std::logic_error("matrix is not an element of the Weyl group");
    return elements_[it->second];
}

std::size_t WeylGroup::index_of(const WeylElement& x) const { return index_.at(x.matrix); }

std::vector<Word> WeylGroup::all_reduced_words(const WeylElement& w) const
{
    if (w.length() == 0)
        return {Word{}};
    std::vector<Word> out;
    for (int i = 1; i <= n_; ++i) {
        const WeylElement& shorter = canonical(apply_generator(w.matrix, i));
        if (shorter.length() >= w.length())
            continue;
        for (Word prefix : all_reduced_words(shorter)) {
            prefix.push_back(i);
            out.push_back(std::move(prefix));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int WeylGroup::inversion_count(const WeylElement& w) const
{
    int count = 0;
    for (const auto& r : roots_) {
        auto img = mat_vec(w.matrix, r);
        if (std::any_of(img.begin(), img.end(), [](long long x) { return x < 0; }))
            ++count;
    }
    return count;
}

std::vector<int> sigma4_permutation(const WeylGroup& g, const WeylElement& w)
{
    if (!g.is_type_a3())
        throw UnsupportedInput("the Σ4 labeling is defined for type A3 only");
    static const int transposition[4][2] = {{0, 0}, {3, 4}, {2, 3}, {1, 2}};
    std::vector<int> p{0, 1, 2, 3, 4};
    // p = σ_{w_1} ∘ σ_{w_2} ∘ ... ∘ σ_{w_k}
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        const int a = transposition[*it][0], b = transposition[*it][1];
        for (int x = 1; x <= 4; ++x) {
            if (p[x] == a)
                p[x] = b;
            else if (p[x] == b)
                p[x] = a;
        }
    }
    return p;
}

std::string cycle_notation(const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size()) - 1;
    std::vector<bool> seen(n + 1, false);
    std::string out;
    for (int start = 1; start <= n; ++start) {
        if (seen[start] || perm[start] == start)
            continue;
        out += "(";
        for (int x = start; !seen[x]; x = perm[x]) {
            seen[x] = true;
            out += std::to_string(x);
        }
        out += ")";
    }
    return out.empty() ? "1" : out;
}

std::string sigma4_label(const WeylGroup& g, const WeylElement& w) { return cycle_notation(sigma4_permutation(g, w)); }

std::string word_to_string(const Word& w)
{
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k)
        out += (k ? "," : "") + std::to_string(w[k]);
    return out;
}

Word parse_word(const std::string& s)
{
    Word w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty())
            continue;
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad word entry '" + tok + "'");
        w.push_back(v);
    }
    return w;
}

}  // namespace preproj
