package com.hazelcast.config;

public class TypeSerializerConfig {
    private String className;
    private String typeClassName;

    public TypeSerializerConfig() {
    }

    public void setClassName(String className) {
        this.className = className;
    }

    public void setTypeClassName(String typeClassName) {
        this.typeClassName = typeClassName;
    }
}
