#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chibound/willow.hpp"

namespace chibound {

// Certificates transcribed from the worked figures, arc for arc.
//
//   p8bar(n)       complement of the 8-vertex path, any n >= 5
//   c5bar(n)       complement of C5, any n >= 5
//   c6bar(n)       complement of C6, any n >= 5
//   cycle(len, n)  the cycle C_len, any len >= 3 and n >= 4; the repeating
//                  gadget drawn for lengths 18 and 19 extended to all lengths
//   f6(n)          the 6-fan (path 0..5 plus dominating center 6), n = 5
//   w6(n)          the 6-wheel (cycle 0..5 plus dominating center 6), n = 5
//   complete(k, n) K_k as a directed path of unit arcs, n = k
//
// Vertex numbering follows make_pattern: paths/cycles 0..len-1 in order,
// fan/wheel center last.  p8bar/c5bar/c6bar are numbered by the underlying
// path/cycle order of the complemented graph.

namespace detail {

inline WillowCertificate p8bar_certificate(int n) {
    if (n < 5) throw std::invalid_argument("p8bar needs modulus >= 5");
    WillowCertificate cert;
    cert.modulus = n;
    cert.tree = WeightedOrientedTree(8);
    cert.tree.add_arc(1, 3, n - 1);
    cert.tree.add_arc(3, 0, 1);
    cert.tree.add_arc(0, 7, n - 2);
    cert.tree.add_arc(7, 4, 1);
    cert.tree.add_arc(4, 6, n - 1);
    cert.tree.add_arc(2, 0, 3);
    cert.tree.add_arc(7, 5, 3);
    cert.embedding = {0, 1, 2, 3, 4, 5, 6, 7};
    return cert;
}

// Shared by c5bar and cycle(5): node 5 is the lone Steiner node.
inline WeightedOrientedTree c5bar_tree(int n) {
    WeightedOrientedTree t(6);
    t.add_arc(0, 5, 2);
    t.add_arc(5, 1, n - 2);
    t.add_arc(1, 3, 1);
    t.add_arc(4, 5, 1);
    t.add_arc(5, 2, 1);
    return t;
}

inline WillowCertificate c5bar_certificate(int n) {
    if (n < 5) throw std::invalid_argument("c5bar needs modulus >= 5");
    WillowCertificate cert;
    cert.modulus = n;
    cert.tree = c5bar_tree(n);
    cert.embedding = {0, 1, 2, 3, 4};
    return cert;
}

inline WillowCertificate c6bar_certificate(int n) {
    if (n < 5) throw std::invalid_argument("c6bar needs modulus >= 5");
    WillowCertificate cert;
    cert.modulus = n;
    cert.tree = WeightedOrientedTree(7);
    cert.tree.add_arc(2, 4, 1);
    cert.tree.add_arc(4, 6, 1);
    cert.tree.add_arc(6, 1, n - 2);
    cert.tree.add_arc(1, 5, 1);
    cert.tree.add_arc(3, 6, 3);
    cert.tree.add_arc(6, 0, 1);
    cert.embedding = {0, 1, 2, 3, 4, 5};
    return cert;
}

// C_len for len >= 6.  Cycle vertices v1..v_len are nodes 0..len-1; the
// figure's Steiner spine y_0, x_0, y_1, x_1, ... continues at node len, two
// per block.  Each block hangs two ascending and two descending cycle
// vertices off its y/x pair; the loose ends are closed by one of two start
// caps at v1 and one of three end caps at the middle, picked by len mod 4 so
// that every cycle length is covered.  Lengths 18 and 19 reproduce the drawn
// trees exactly (start cap 1 with end caps 1 and 2, four blocks).
inline WillowCertificate cycle_gadget_certificate(int len, int n) {
    const int r = len % 4;
    const int start = (r == 2 || r == 3) ? 1 : 2;      // cycle vertices used by the start cap
    const int end = (r == 2) ? 1 : (r == 1 ? 3 : 2);   // cycle vertices used by the end cap
    const int blocks = (len - start - end) / 4;        // four cycle vertices per block
    const int mid = 2 * blocks + 2;  // 1-indexed middle cycle vertex
    auto y = [&](int i) { return len + 2 * i; };
    auto x = [&](int i) { return len + 2 * i + 1; };

    WillowCertificate cert;
    cert.modulus = n;
    cert.tree = WeightedOrientedTree(len + 2 * blocks + (end == 3 ? 1 : 0));
    if (start == 1) {
        cert.tree.add_arc(0, y(0), 1);
    } else {
        cert.tree.add_arc(len - 1, 0, 1);
        cert.tree.add_arc(0, y(0), n - 2);
    }
    for (int i = 0; i < blocks; ++i) {
        cert.tree.add_arc(y(i), 2 * i + 1, 1);            // y_i -> v_{2i+2}
        cert.tree.add_arc(2 * i + 2, x(i), 1);            // v_{2i+3} -> x_i
        const int desc = len - 2 * i - start;             // v_{desc+1} hangs off y_i
        cert.tree.add_arc(y(i), desc, 2);
        cert.tree.add_arc(desc - 1, x(i), 2);
        cert.tree.add_arc(x(i), y(i), n - 3);
        if (i + 1 < blocks) cert.tree.add_arc(x(i), y(i + 1), n - 3);
    }
    if (end == 1) {
        cert.tree.add_arc(x(blocks - 1), mid - 1, 1);
    } else if (end == 2) {
        cert.tree.add_arc(x(blocks - 1), mid - 1, n - 2);
        cert.tree.add_arc(mid - 1, mid, 1);
    } else {
        cert.tree.add_arc(x(blocks - 1), y(blocks), n - 3);
        cert.tree.add_arc(y(blocks), mid - 1, 1);
        cert.tree.add_arc(mid, y(blocks), 1);
        cert.tree.add_arc(y(blocks), mid + 1, 2);
    }
    cert.embedding.resize(len);
    for (int v = 0; v < len; ++v) cert.embedding[v] = v;
    return cert;
}

inline WillowCertificate cycle_certificate(int len, int n) {
    if (len < 3) throw std::invalid_argument("cycle needs length >= 3");
    if (n < 4) throw std::invalid_argument("cycle needs modulus >= 4");
    WillowCertificate cert;
    cert.modulus = n;
    if (len == 3) {
        cert.tree = WeightedOrientedTree(3);
        cert.tree.add_arc(0, 1, 1);
        cert.tree.add_arc(1, 2, 1);
        cert.embedding = {0, 1, 2};
    } else if (len == 4) {
        cert.tree = WeightedOrientedTree(4);
        cert.tree.add_arc(0, 1, 1);
        cert.tree.add_arc(1, 2, n - 1);
        cert.tree.add_arc(2, 3, 1);
        cert.embedding = {0, 1, 2, 3};
    } else if (len == 5) {
        // C5 is self-complementary: reuse the c5bar tree, re-reading its
        // embedded vertices in complement-cycle order.
        cert.tree = c5bar_tree(n);
        cert.embedding = {0, 2, 4, 1, 3};
    } else {
        cert = cycle_gadget_certificate(len, n);
    }
    return cert;
}

inline WillowCertificate f6_certificate(int n) {
    if (n != 5) throw std::invalid_argument("f6 is drawn for modulus 5 only");
    WillowCertificate cert;
    cert.modulus = n;
    cert.tree = WeightedOrientedTree(7);
    cert.tree.add_arc(0, 6, 2);
    cert.tree.add_arc(2, 6, 2);
    cert.tree.add_arc(5, 6, 3);
    cert.tree.add_arc(3, 2, 1);
    cert.tree.add_arc(6, 1, 2);
    cert.tree.add_arc(6, 4, 3);
    cert.embedding = {0, 1, 2, 3, 4, 5, 6};
    return cert;
}

inline WillowCertificate w6_certificate(int n) {
    if (n != 5) throw std::invalid_argument("w6 is drawn for modulus 5 only");
    WillowCertificate cert;
    cert.modulus = n;
    cert.tree = WeightedOrientedTree(7);
    cert.tree.add_arc(0, 1, 1);
    cert.tree.add_arc(1, 6, 2);
    cert.tree.add_arc(6, 2, 2);
    cert.tree.add_arc(6, 5, 3);
    cert.tree.add_arc(4, 3, 1);
    cert.tree.add_arc(3, 6, 2);
    cert.embedding = {0, 1, 2, 3, 4, 5, 6};
    return cert;
}

inline WillowCertificate complete_certificate(int k, int n) {
    if (k < 1) throw std::invalid_argument("complete needs k >= 1");
    if (n != k) throw std::invalid_argument("complete(k) is a k-willow; modulus must equal k");
    WillowCertificate cert;
    cert.modulus = n;
    cert.tree = WeightedOrientedTree(k);
    for (int i = 0; i + 1 < k; ++i) cert.tree.add_arc(i, i + 1, 1);
    cert.embedding.resize(k);
    for (int v = 0; v < k; ++v) cert.embedding[v] = v;
    return cert;
}

}  // namespace detail

inline WillowCertificate builtin_certificate(const std::string& name, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("builtin " + name + " takes " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (name == "p8bar") {
        want(1);
        return detail::p8bar_certificate(params[0]);
    }
    if (name == "c5bar") {
        want(1);
        return detail::c5bar_certificate(params[0]);
    }
    if (name == "c6bar") {
        want(1);
        return detail::c6bar_certificate(params[0]);
    }
    if (name == "cycle") {
        want(2);
        return detail::cycle_certificate(params[0], params[1]);
    }
    if (name == "f6") {
        want(1);
        return detail::f6_certificate(params[0]);
    }
    if (name == "w6") {
        want(1);
        return detail::w6_certificate(params[0]);
    }
    if (name == "complete") {
        want(2);
        return detail::complete_certificate(params[0], params[1]);
    }
    throw std::invalid_argument("unknown builtin certificate: " + name);
}

}  // namespace chibound
