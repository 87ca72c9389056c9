//! AHU canonical form rooted at the tree center.
//!
//! A rooted subtree is encoded as `(` + sorted child encodings + `)`. A tree
//! with two central vertices is encoded from both and the smaller string
//! wins, so two trees are isomorphic exactly when their forms are equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Tree, Vertex};

/// Byte-comparable isomorphism key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn encode_rooted(tree: &Tree, root: Vertex) -> String {
    // iterative post-order so deep paths do not blow the stack
    let n = tree.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Option<String>> = vec![None; n];
    let mut children: Vec<Vec<String>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[u]);
        kids.sort_unstable();
        let mut code = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        code.push('(');
        kids.iter().for_each(|k| code.push_str(k));
        code.push(')');
        if u == root {
            codes[u] = Some(code);
        } else {
            children[parent[u]].push(code);
        }
    }
    codes[root].take().unwrap()
}

impl Tree {
    pub fn canonical_form(&self) -> CanonicalForm {
        let form = self
            .center()
            .into_iter()
            .map(|c| encode_rooted(self, c))
            .min()
            .expect("every tree has a center");
        CanonicalForm(form)
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.order() == other.order() && self.canonical_form() == other.canonical_form()
    }
}
