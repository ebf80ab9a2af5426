#include "skewlines/euler.hpp"

#include <algorithm>
#include <stdexcept>

namespace skew {

namespace {

int plus_count(const LinkMatrix& X, int i) {
    int c = 0;
    for (int j = 0; j < X.n; ++j)
        if (j != i && X.at(i, j) > 0) ++c;
    return c;
}

} // namespace

EulerOrientation euler_orient(const LinkMatrix& X) {
    if (X.n % 2 == 0) throw domain_error("euler_orient requires odd order");
    std::vector<int> flips;
    for (int i = 0; i < X.n; ++i)
        if (plus_count(X, i) % 2 == 1) flips.push_back(i + 1);
    if (flips.size() % 2 != 0)
        throw std::logic_error("odd number of odd rows in an odd-order matrix");
    EulerOrientation out{switch_at(X, flips), flips};
    for (int i = 0; i < X.n; ++i)
        if (plus_count(out.matrix, i) % 2 != 0)
            throw std::logic_error("euler orientation left an odd row");
    return out;
}

std::vector<std::pair<int, std::vector<int>>> euler_partition_odd(const LinkMatrix& X) {
    LinkMatrix E = euler_orient(X).matrix;
    std::vector<std::pair<int, std::vector<int>>> classes;
    for (int i = 0; i < E.n; ++i) {
        int k = plus_count(E, i) / 2;
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& c) { return c.first == k; });
        if (it == classes.end()) {
            classes.push_back({k, {i + 1}});
        } else {
            it->second.push_back(i + 1);
        }
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

namespace {

// eps_i of each listed row, computed on the submatrix induced by rows
std::vector<int> sub_eps(const LinkMatrix& X, const std::vector<int>& rows) {
    int all = 1;
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = a + 1; b < rows.size(); ++b) all *= X.at(rows[a], rows[b]);
    std::vector<int> eps(rows.size());
    for (size_t a = 0; a < rows.size(); ++a) {
        int rowprod = 1;
        for (size_t b = 0; b < rows.size(); ++b)
            if (b != a) rowprod *= X.at(rows[a], rows[b]);
        eps[a] = rowprod * all;
    }
    return eps;
}

std::unique_ptr<EulerTree::Node> build_node(const LinkMatrix& X, std::vector<int> rows) {
    auto eps = sub_eps(X, rows);
    std::vector<int> minus, plus;
    for (size_t a = 0; a < rows.size(); ++a)
        (eps[a] < 0 ? minus : plus).push_back(rows[a]);
    auto node = std::make_unique<EulerTree::Node>();
    if (minus.empty() || plus.empty()) {
        node->rows.reserve(rows.size());
        for (int r : rows) node->rows.push_back(r + 1);
        node->signature = minus.empty() ? 1 : -1;
        if (rows.size() == 2 && node->signature != 1)
            throw std::logic_error("2-row Eulerian leaf must have signature 1");
        return node;
    }
    if (minus.size() % 2 != 0 || plus.size() % 2 != 0)
        throw std::logic_error("Euler split produced an odd part");
    node->rows.reserve(rows.size());
    for (int r : rows) node->rows.push_back(r + 1);
    node->minus = build_node(X, minus);
    node->plus = build_node(X, plus);
    return node;
}

void render_node(const EulerTree::Node& node, const std::string& word, bool is_root,
                 std::string& out) {
    if (node.leaf()) {
        out += '(';
        out += word;
        out += ":{";
        for (size_t i = 0; i < node.rows.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(node.rows[i]);
        }
        out += '}';
        if (node.rows.size() > 2) out += node.signature > 0 ? ":+1" : ":-1";
        out += ')';
        return;
    }
    if (!is_root) out += '(';
    render_node(*node.minus, word + "-", false, out);
    render_node(*node.plus, word + "+", false, out);
    if (!is_root) out += ')';
}

void collect_leaves(const EulerTree::Node* node, std::vector<const EulerTree::Node*>& out) {
    if (node->leaf()) {
        out.push_back(node);
        return;
    }
    collect_leaves(node->minus.get(), out);
    collect_leaves(node->plus.get(), out);
}

} // namespace

EulerTree euler_tree(const LinkMatrix& X) {
    if (X.n % 2 != 0) throw domain_error("euler_tree requires even order");
    std::vector<int> rows(X.n);
    for (int i = 0; i < X.n; ++i) rows[i] = i;
    EulerTree t;
    t.n = X.n;
    t.root = build_node(X, rows);
    return t;
}

std::string to_string(const EulerTree& t) {
    std::string out;
    render_node(*t.root, "", true, out);
    return out;
}

std::vector<const EulerTree::Node*> tree_leaves(const EulerTree& t) {
    std::vector<const EulerTree::Node*> out;
    collect_leaves(t.root.get(), out);
    return out;
}

RefineInvariants refine_invariants(const LinkMatrix& X) {
    RefineInvariants inv;
    if (X.n % 2 == 0) {
        inv.even_order = true;
        EulerTree t = euler_tree(X);
        auto leaves = tree_leaves(t);
        size_t r = leaves.size();
        inv.parts.reserve(r);
        for (auto* leaf : leaves) inv.parts.push_back(leaf->rows);
        inv.a.assign(r, std::vector<long long>(r, 0));
        for (size_t i = 0; i < r; ++i) {
            inv.a[i][i] = leaves[i]->signature;
            for (size_t j = i + 1; j < r; ++j) {
                int prod = 1;
                for (int s : inv.parts[i])
                    for (int tt : inv.parts[j]) prod *= X.at(s - 1, tt - 1);
                inv.a[i][j] = inv.a[j][i] = prod;
            }
        }
    } else {
        LinkMatrix E = euler_orient(X).matrix;
        auto classes = euler_partition_odd(X);
        size_t r = classes.size();
        inv.parts.reserve(r);
        for (auto& [k, rows] : classes) {
            inv.part_keys.push_back(k);
            inv.parts.push_back(rows);
        }
        inv.a.assign(r, std::vector<long long>(r, 0));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                long long sum = 0;
                for (int s : inv.parts[i])
                    for (int tt : inv.parts[j])
                        if (s != tt) sum += E.at(s - 1, tt - 1);
                inv.a[i][j] = sum;
            }
    }
    return inv;
}

SeriesTable tree_series(int N) {
    if (N < 0) throw domain_error("tree_series requires N >= 1");
    SeriesTable st;
    st.alpha.assign(N + 1, 0);
    st.beta.assign(N + 1, 0);
    st.alpha[0] = 1;
    st.beta[0] = 1;
    for (int n = 1; n <= N; ++n) {
        BigInt a = 1, b = (n == 1) ? 1 : 2;
        for (int i = 1; i < n; ++i) {
            a += st.alpha[i] * st.alpha[n - i];
            b += st.beta[i] * st.beta[n - i];
        }
        st.alpha[n] = a;
        st.beta[n] = b;
    }
    return st;
}

} // namespace skew
