#pragma once

#include <string>

#include "cosetlab/code.hpp"

inline cosetlab::LinearCode corpus(const std::string& name) {
    return cosetlab::load_code(std::string(COSETLAB_CORPUS_DIR) + "/" + name + ".code");
}

/// Words from packed entries, e.g. w(f, {1, 1, 0}).
inline cosetlab::Word w(const cosetlab::Field& f, std::initializer_list<cosetlab::Element> e) {
    return cosetlab::Word(f, std::vector<cosetlab::Element>(e));
}
