namespace superconf {}
