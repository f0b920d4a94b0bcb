namespace pancake {}
