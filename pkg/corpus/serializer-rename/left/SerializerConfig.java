package com.hazelcast.config;

public class SerializerConfig {
    private String className;
    private String typeClassName;

    public SerializerConfig() {
    }

    public void setClassName(String className) {
        this.className = className;
    }

    public void setTypeClassName(String typeClassName) {
        this.typeClassName = typeClassName;
    }
}
