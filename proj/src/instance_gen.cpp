#include "rpq/instance_gen.hpp"

namespace rpq {

namespace {

AstPtr random_label(std::mt19937_64& rng, const std::vector<std::string>& labels) {
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    return ast::label(labels[pick(rng)]);
}

AstPtr random_concat(std::mt19937_64& rng, const std::vector<std::string>& labels,
                     unsigned length) {
    std::vector<AstPtr> parts;
    for (unsigned i = 0; i < length; ++i) parts.push_back(random_label(rng, labels));
    return ast::concat(std::move(parts));
}

} // namespace

AstPtr random_batch_unit(std::mt19937_64& rng, const std::vector<std::string>& labels,
                         unsigned max_pre, unsigned max_r, unsigned max_post) {
    std::uniform_int_distribution<unsigned> pre_len(0, max_pre);
    std::uniform_int_distribution<unsigned> r_len(1, max_r);
    std::uniform_int_distribution<unsigned> post_len(0, max_post);
    std::uniform_int_distribution<int> coin(0, 1);

    AstPtr r = random_concat(rng, labels, r_len(rng));
    AstPtr closure = coin(rng) ? ast::plus(r) : ast::star(r);

    std::vector<AstPtr> parts;
    if (unsigned n = pre_len(rng)) parts.push_back(random_concat(rng, labels, n));
    parts.push_back(closure);
    if (unsigned n = post_len(rng)) parts.push_back(random_concat(rng, labels, n));
    return ast::concat(std::move(parts));
}

AstPtr random_ast(std::mt19937_64& rng, const std::vector<std::string>& labels, unsigned depth) {
    std::uniform_int_distribution<int> kind(0, depth == 0 ? 0 : 4);
    switch (kind(rng)) {
    case 1: {
        std::uniform_int_distribution<unsigned> arity(2, 3);
        std::vector<AstPtr> children;
        for (unsigned i = 0, n = arity(rng); i < n; ++i)
            children.push_back(random_ast(rng, labels, depth - 1));
        return ast::concat(std::move(children));
    }
    case 2: {
        std::uniform_int_distribution<unsigned> arity(2, 3);
        std::vector<AstPtr> children;
        for (unsigned i = 0, n = arity(rng); i < n; ++i)
            children.push_back(random_ast(rng, labels, depth - 1));
        return ast::alt(std::move(children));
    }
    case 3:
        return ast::plus(random_ast(rng, labels, depth - 1));
    case 4:
        return ast::star(random_ast(rng, labels, depth - 1));
    default:
        return random_label(rng, labels);
    }
}

Instance random_instance(std::mt19937_64& rng, const InstanceParams& params) {
    std::uniform_int_distribution<unsigned> scale(1, params.max_scale);
    std::uniform_int_distribution<unsigned> factor(0, params.max_edge_factor);
    std::uniform_int_distribution<unsigned> nlabels(1, params.max_labels);

    Instance inst;
    unsigned label_count = nlabels(rng);
    inst.graph = generate_rmat(scale(rng), factor(rng), label_count, rng());
    inst.query = random_batch_unit(rng, default_label_names(label_count), params.max_pre,
                                   params.max_r, params.max_post);
    inst.query_text = canonical_text(inst.query);
    return inst;
}

} // namespace rpq
