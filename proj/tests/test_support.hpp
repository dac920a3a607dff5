#pragma once

#include <doctest.h>

#include "ecs/diff_op.hpp"
#include "ecs/partition_maya.hpp"

namespace doctest {

template <> struct StringMaker<rext::Rational> {
    static String convert(const rext::Rational& v) { return rext::to_string(v).c_str(); }
};
template <> struct StringMaker<rext::BigInt> {
    static String convert(const rext::BigInt& v) { return v.get_str().c_str(); }
};
template <> struct StringMaker<rext::UPoly> {
    static String convert(const rext::UPoly& v) { return v.to_string().c_str(); }
};
template <> struct StringMaker<rext::MultiPoly> {
    static String convert(const rext::MultiPoly& v) { return v.to_string().c_str(); }
};
template <> struct StringMaker<rext::RationalFn> {
    static String convert(const rext::RationalFn& v) { return v.to_string().c_str(); }
};
template <> struct StringMaker<rext::ExpPolyFn> {
    static String convert(const rext::ExpPolyFn& v) { return v.to_string().c_str(); }
};
template <> struct StringMaker<rext::LinearDiffOp> {
    static String convert(const rext::LinearDiffOp& v) { return v.to_string().c_str(); }
};
template <> struct StringMaker<rext::Partition> {
    static String convert(const rext::Partition& v) { return v.to_string().c_str(); }
};
template <> struct StringMaker<rext::IndexSet> {
    static String convert(const rext::IndexSet& v) { return v.to_string().c_str(); }
};
template <> struct StringMaker<rext::MayaDiagram> {
    static String convert(const rext::MayaDiagram& v) { return v.to_string().c_str(); }
};

}  // namespace doctest
