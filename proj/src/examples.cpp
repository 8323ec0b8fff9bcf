namespace qham {}
