package com.hazelcast.config;

public class XmlConfigBuilder {
    private void handleSerializers(final Node node) {
        for (Node child : childElements(node)) {
            final String name = cleanNodeName(child);
            if ("serializer".equals(name)) {
                SerializerConfig serializer = new SerializerConfig();
                serializer.setClassName(getAttribute(child, "class-name"));
                final String typeClassName = getAttribute(child, "type-class");
                serializer.setTypeClassName(typeClassName);
                addSerializerConfig(serializer);
            }
        }
    }

private Iterable<Node> childElements(Node node) {
    return null;
}

private String cleanNodeName(Node child) {
    return null;
}

private String getAttribute(Node node, String name) {
    return null;
}

    private void addSerializerConfig(SerializerConfig serializerConfig) {
    }
}
