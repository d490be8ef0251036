#pragma once

namespace ck {

// Reference classification tables for 0 <= p,q <= 8, row-major in p then q.
// clifford_table[p][q] names C(p,q) as a real matrix algebra; group_table[p][q]
// names the twisted-conjugation group G(p,q) up to isomorphism.
inline constexpr const char* kCliffordTable[9][9] = {
    {"R", "C", "H", "H^2", "H(2)", "C(4)", "R(8)", "R(8)^2", "R(16)"},
    {"R^2", "R(2)", "C(2)", "H(2)", "H(2)^2", "H(4)", "C(8)", "R(16)", "R(16)^2"},
    {"R(2)", "R(2)^2", "R(4)", "C(4)", "H(4)", "H(4)^2", "H(8)", "C(16)", "R(32)"},
    {"C(2)", "R(4)", "R(4)^2", "R(8)", "C(8)", "H(8)", "H(8)^2", "H(16)", "C(32)"},
    {"H(2)", "C(4)", "R(8)", "R(8)^2", "R(16)", "C(16)", "H(16)", "H(16)^2", "H(32)"},
    {"H(2)^2", "H(4)", "C(8)", "R(16)", "R(16)^2", "R(32)", "C(32)", "H(32)", "H(32)^2"},
    {"H(4)", "H(4)^2", "H(8)", "C(16)", "R(32)", "R(32)^2", "R(64)", "C(64)", "H(64)"},
    {"C(8)", "H(8)", "H(8)^2", "H(16)", "C(32)", "R(64)", "R(64)^2", "R(128)", "C(128)"},
    {"R(16)", "C(16)", "H(16)", "H(16)^2", "H(32)", "C(64)", "R(128)", "R(128)^2", "R(256)"}};

inline constexpr const char* kGroupTable[9][9] = {
    {"O(1)", "O(1)", "U(1)", "Sp(1)", "Sp(1)^2", "Sp(2)", "U(4)", "O(8)", "O(8)^2"},
    {"O(1)", "GL(1,R)", "Sp(1,R)", "Sp(1,C)", "Sp(1,1)", "GL(2,H)", "O*(8)", "O(8,C)",
     "O(8,8)"},
    {"U(1)", "Sp(1,R)", "Sp(1,R)^2", "Sp(2,R)", "U(2,2)", "O*(8)", "O*(8)^2", "O*(16)",
     "U(8,8)"},
    {"Sp(1)", "Sp(1,C)", "Sp(2,R)", "GL(4,R)", "O(4,4)", "O(8,C)", "O*(16)", "GL(8,H)",
     "Sp(8,8)"},
    {"Sp(1)^2", "Sp(1,1)", "U(2,2)", "O(4,4)", "O(4,4)^2", "O(8,8)", "U(8,8)", "Sp(8,8)",
     "Sp(8,8)^2"},
    {"Sp(2)", "GL(2,H)", "O*(8)", "O(8,C)", "O(8,8)", "GL(16,R)", "Sp(16,R)", "Sp(16,C)",
     "Sp(16,16)"},
    {"U(4)", "O*(8)", "O*(8)^2", "O*(16)", "U(8,8)", "Sp(16,R)", "Sp(16,R)^2", "Sp(32,R)",
     "U(32,32)"},
    {"O(8)", "O(8,C)", "O*(16)", "GL(8,H)", "Sp(8,8)", "Sp(16,C)", "Sp(32,R)", "GL(64,R)",
     "O(64,64)"},
    {"O(8)^2", "O(8,8)", "U(8,8)", "Sp(8,8)", "Sp(8,8)^2", "Sp(16,16)", "U(32,32)",
     "O(64,64)", "O(64,64)^2"}};

}  // namespace ck
