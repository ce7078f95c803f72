# Codewords: one letter per node, read in pre-order.
# root and only children -> s; in a sibling group: first l, middle m, last r.

from ordtrees import Tree, decode, encode, preorder_subtree_sizes, to_dot, to_paren, validate

word = "slslrmsrlmsmr"          # 13 nodes, the root has three children
tree = decode(word)
print(tree.size, tree.degree)   # 13 3
print(to_paren(word))
print(preorder_subtree_sizes(word))

# the last child of the root has four children, so the word needs delta >= 4
print(validate(word, 4).describe())
print(validate(word, 3).describe())   # SiblingOverflow at position 12

# building a tree by hand and encoding it
t = Tree([Tree(), Tree([Tree()])])
print(encode(t))               # slrs
assert decode(encode(t)) == t

print(to_dot("slrs"))
